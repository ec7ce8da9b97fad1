import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from iac_link_abstraction.lls.mcs import McsEntry, mcs_entry
from iac_link_abstraction.lls.simulator import LinkLevelSimulator
from iac_link_abstraction.phy.constellation import SUPPORTED_ORDERS
from iac_link_abstraction.phy.scenario_config import ScenarioConfig


class LlsConfig(BaseModel):
    """Link-level simulation settings for one serving MCS against one interferer order."""

    model_config = ConfigDict(frozen=True)

    mcs: McsEntry
    mod2: int = 4
    scenario: ScenarioConfig = ScenarioConfig()
    min_block_errors: int = Field(default=100, ge=20)
    max_blocks: int = Field(default=20000, ge=1)
    batch_size: int = Field(default=50, ge=1)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)

    @model_validator(mode='before')
    @classmethod
    def expand_mcs_index(cls, data):
        """
        Accepts a bare MCS index and frames it onto the scenario codeword
        """
        if isinstance(data, dict) and isinstance(data.get('mcs'), int):
            scenario = ScenarioConfig.model_validate(data.get('scenario') or {})
            data = {**data, 'mcs': mcs_entry(data['mcs'], scenario.n_subcarriers, scenario.v1)}
        return data

    @field_validator('mod2')
    @classmethod
    def check_mod2(cls, value):
        if value not in SUPPORTED_ORDERS:
            raise ValueError(f'mod2 must be one of {SUPPORTED_ORDERS}, got {value}')
        return value

    @model_validator(mode='after')
    def check_framing(self):
        if self.mcs.matched_length > self.capacity:
            raise ValueError(f'MCS {self.mcs.index} needs {self.mcs.matched_length} coded bits, '
                             f'the codeword holds {self.capacity}')
        return self

    @property
    def capacity(self):
        """
        Coded bits carried by one codeword
        """
        return self.mcs.bits_per_symbol * self.scenario.n_subcarriers * self.scenario.v1

    @classmethod
    def load_from_config_file(cls, file_path):
        """
        Creates a class instance
        Initializes internal fields from configuration file
        """
        with open(file_path) as f:
            lls_config = yaml.safe_load(f) or {}

        return cls(**lls_config)

    def with_mcs(self, index):
        """
        Copy of this config simulating another MCS of the default table
        """
        return self.model_copy(update={'mcs': mcs_entry(index, self.scenario.n_subcarriers, self.scenario.v1)})

    def create_simulator(self):
        """
        Creates a simulator instance
        """
        return LinkLevelSimulator(self)
