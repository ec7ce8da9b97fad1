import yaml
from pydantic import BaseModel, ConfigDict, Field


class OracleConfig(BaseModel):
    """Monte-Carlo settings of the exact joint-ML MIB evaluation."""

    model_config = ConfigDict(frozen=True)

    n_noise_samples: int = Field(default=500, ge=100)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)
    layer: int = Field(default=1, ge=1, le=2)
    min_bound_gap: float = Field(default=1e-3, gt=0)

    @classmethod
    def load_from_config_file(cls, file_path):
        """
        Creates a class instance
        Initializes internal fields from configuration file
        """
        with open(file_path) as f:
            oracle_config = yaml.safe_load(f) or {}

        return cls(**oracle_config)
