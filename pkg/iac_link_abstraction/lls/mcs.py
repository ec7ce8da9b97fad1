from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_validator

from iac_link_abstraction.errors import ConfigError
from iac_link_abstraction.lls.coding import (check_code_rate, fit_info_bits,
                                             matched_length)
from iac_link_abstraction.phy.constellation import SUPPORTED_ORDERS

# index -> (modulation order, code rate)
DEFAULT_MCS_TABLE = {
    5: (4, '1/3'),
    9: (4, '1/2'),
    17: (16, '1/2'),
    20: (16, '2/3'),
    26: (64, '3/4')
}


class McsEntry(BaseModel):
    """Modulation and coding scheme framed onto one codeword."""

    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=0)
    modulation: int
    code_rate: str
    info_bits: int = Field(gt=0)

    @field_validator('modulation')
    @classmethod
    def check_modulation(cls, value):
        if value not in SUPPORTED_ORDERS:
            raise ValueError(f'modulation must be one of {SUPPORTED_ORDERS}, got {value}')
        return value

    @field_validator('code_rate')
    @classmethod
    def check_rate(cls, value):
        return check_code_rate(value)

    @property
    def rate(self):
        return Fraction(self.code_rate)

    @property
    def bits_per_symbol(self):
        return self.modulation.bit_length() - 1

    @property
    def matched_length(self):
        return matched_length(self.info_bits, self.code_rate)

    @classmethod
    def create(cls, index, modulation, code_rate, n_subcarriers, v1):
        """
        Creates an entry whose information block fills one codeword of n_subcarriers x v1 symbols
        """
        capacity = (modulation.bit_length() - 1) * n_subcarriers * v1
        return cls(index=index,
                   modulation=modulation,
                   code_rate=code_rate,
                   info_bits=fit_info_bits(capacity, code_rate))


def default_mcs_table(n_subcarriers=48, v1=1):
    return {index: McsEntry.create(index, modulation, code_rate, n_subcarriers, v1)
            for index, (modulation, code_rate) in DEFAULT_MCS_TABLE.items()}


def mcs_entry(index, n_subcarriers=48, v1=1):
    """
    Raises ConfigError if the index is not in the default table
    """
    if index not in DEFAULT_MCS_TABLE:
        raise ConfigError(f'Unknown MCS index {index}; expected one of {sorted(DEFAULT_MCS_TABLE)}')
    modulation, code_rate = DEFAULT_MCS_TABLE[index]
    return McsEntry.create(index, modulation, code_rate, n_subcarriers, v1)
