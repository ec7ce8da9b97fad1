from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = fh.read()

setup(
    name = 'iac-link-abstraction',
    version = '1.0.0',
    description = 'Link abstraction for interference-aware MIMO-OFDM receivers with ISR-adaptive MIB combining',
    long_description = long_description,
    long_description_content_type = "text/markdown",
    python_requires = '>=3.10',
    py_modules = ['cli', 'iac_link_abstraction'],
    packages = find_packages(exclude=['tests']),
    install_requires = [requirements],
    entry_points = '''
        [console_scripts]
        iacla=cli:cmd_root
    '''
)
