import hashlib
import json

from pydantic import BaseModel, ConfigDict, Field

from iac_link_abstraction import __version__
from iac_link_abstraction.utils.files import (SCHEMA_VERSION,
                                              export_to_json_file,
                                              get_checksum)
from iac_link_abstraction.utils.seeding import RNG_ALGORITHM


class RunManifest(BaseModel):
    """Record of one CLI run: what was asked, with which inputs, producing which outputs."""

    model_config = ConfigDict(frozen=True)

    command: str
    config: dict = Field(default_factory=dict)
    rng_algorithm: str = RNG_ALGORITHM
    master_seed: int | None = None
    inputs: dict[str, str] = Field(default_factory=dict)
    tool_version: str = __version__

    @classmethod
    def for_run(cls, command, config, master_seed=None, input_paths=()):
        """
        Creates a manifest and fingerprints the input files
        """
        inputs = {str(path): get_checksum(path) for path in input_paths}
        return cls(command=command, config=config, master_seed=master_seed, inputs=inputs)

    @property
    def digest(self):
        """
        Digest of the run identity; written into every output file header
        """
        canonical = json.dumps(self.model_dump(mode='json'), sort_keys=True, separators=(',', ':'))
        return 'sha256:' + hashlib.sha256(canonical.encode('utf-8')).hexdigest()

    def export(self, manifest_file_path, output_paths):
        """
        Writes the manifest with the digests of the produced files
        """
        data = self.model_dump(mode='json')
        data['schema_version'] = SCHEMA_VERSION
        data['digest'] = self.digest
        data['outputs'] = {str(path): get_checksum(path) for path in output_paths}
        export_to_json_file(manifest_file_path, data)
