import csv
import hashlib
import io
import json
import os

import yaml

from iac_link_abstraction.errors import FormatVersionError

SCHEMA_VERSION = '1.0'


def check_schema_version(version, file_path=''):
    """
    Raises a FormatVersionError if a file's schema major differs from the supported one
    """
    if version is None:
        raise FormatVersionError(f'Missing schema_version in {file_path}')

    major = str(version).split('.')[0]
    if major != SCHEMA_VERSION.split('.')[0]:
        raise FormatVersionError(f'Unsupported schema version {version} in {file_path} (expected {SCHEMA_VERSION})')


def export_to_json_file(output_file_path, data):
    """
    Exports data to a JSON file
    The file is created if it does not exist or its contents is cleared if it exists
    """
    with open(output_file_path, 'w') as f:
        json.dump(data, f, indent=4, sort_keys=True)
        f.write('\n')


def import_from_json_file(input_file_path):
    """
    Loads a JSON file written by export_to_json_file and checks its schema version
    """
    with open(input_file_path, 'r') as f:
        data = json.load(f)

    check_schema_version(data.get('schema_version'), input_file_path)
    return data


def write_csv_file(output_file_path, header, columns, rows):
    """
    Writes a CSV file preceded by a YAML header block whose lines start with '# '
    The schema version is always part of the header
    """
    header = dict(header)
    header['schema_version'] = SCHEMA_VERSION
    header_text = yaml.safe_dump(header, sort_keys=True, default_flow_style=False)

    with open(output_file_path, 'w', newline='') as f:
        for line in header_text.splitlines():
            f.write(f'# {line}\n')
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_format_cell(value) for value in row])


def read_csv_file(input_file_path):
    """
    Reads a CSV file written by write_csv_file
    Returns the header as a dict and the rows as a list of dicts of strings
    """
    header_lines = []
    body_lines = []

    with open(input_file_path, 'r', newline='') as f:
        for line in f:
            if line.startswith('#') and not body_lines:
                header_lines.append(line[2:] if line.startswith('# ') else line[1:])
            else:
                body_lines.append(line)

    try:
        header = yaml.safe_load(''.join(header_lines)) or {}
    except yaml.YAMLError as e:
        raise FormatVersionError(f'Malformed header in {input_file_path}: {e}')

    check_schema_version(header.get('schema_version'), input_file_path)
    rows = list(csv.DictReader(io.StringIO(''.join(body_lines))))
    return header, rows


def get_checksum(file_path):
    """
    Gets the sha256 hash of a file's content
    """
    file_hash = hashlib.sha256()

    with open(file_path, 'rb') as f:
        while chunk := f.read(8192):
            file_hash.update(chunk)

    return 'sha256:' + file_hash.hexdigest()


def create_directory(dir_path):
    """
    Creates a folder if it does not exist
    """
    if dir_path and not os.path.exists(dir_path):
        os.makedirs(dir_path)


def _format_cell(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, float):
        # repr is the shortest string that round-trips
        return repr(float(value))
    return value
