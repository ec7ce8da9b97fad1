import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator

from iac_link_abstraction.utils.seeding import create_rng


class ScenarioConfig(BaseModel):
    """Two-cell interference scenario: serving BS 1, interfering BS 2, one UE."""

    model_config = ConfigDict(frozen=True)

    n_rx: int = Field(default=2, ge=1)
    v1: int = Field(default=1, ge=1, le=2)
    v2: int = Field(default=1, ge=1, le=2)
    n_subcarriers: int = Field(default=48, ge=1)
    noise_var: float = Field(default=1.0, gt=0)
    interferer_scale: float = Field(default=1.0, ge=0)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)

    @model_validator(mode='after')
    def check_antennas(self):
        if self.n_rx < max(self.v1, self.v2):
            raise ValueError(f'n_rx={self.n_rx} must be at least max(v1, v2)={max(self.v1, self.v2)}')
        return self

    @classmethod
    def load_from_config_file(cls, file_path):
        """
        Creates a class instance
        Initializes internal fields from configuration file
        """
        with open(file_path) as f:
            scenario_config = yaml.safe_load(f) or {}

        return cls(**scenario_config)

    def create_rng(self):
        """
        Creates the random generator seeded for this scenario
        """
        return create_rng(self.seed)
