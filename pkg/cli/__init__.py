"""Module for the command line interface.

Import here all groups that directly inherit from root.
"""
from cli.root import cmd_root
from cli.channels import cmd_channels
from cli.tables import cmd_tables
from cli.lls import cmd_lls
from cli.oracle import cmd_oracle
from cli.model import cmd_model

__all__ = [
    'cmd_root',
    'cmd_channels',
    'cmd_tables',
    'cmd_lls',
    'cmd_oracle',
    'cmd_model'
]
