from .files import (SCHEMA_VERSION,
                    check_schema_version,
                    create_directory,
                    export_to_json_file,
                    get_checksum,
                    import_from_json_file,
                    read_csv_file,
                    write_csv_file)
from .parallel import default_workers, parallel_map
from .seeding import RNG_ALGORITHM, create_rng, derive_seed

__all__ = [
    'SCHEMA_VERSION',
    'check_schema_version',
    'create_directory',
    'export_to_json_file',
    'get_checksum',
    'import_from_json_file',
    'read_csv_file',
    'write_csv_file',
    'default_workers',
    'parallel_map',
    'RNG_ALGORITHM',
    'create_rng',
    'derive_seed'
]
