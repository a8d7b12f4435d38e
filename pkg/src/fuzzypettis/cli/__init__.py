"""Command-line front end: scenario files in, CSV reports out."""

from .commands import (
    ExitCode,
    cmd_decompose,
    cmd_integrate,
    cmd_plot_data,
    cmd_verify,
    exit_code_for,
)
from .scenario import (
    Scenario,
    dump_scenario,
    integral_scenario,
    load_scenario,
    parse_direction,
    parse_set_spec,
    scenario_from_dict,
    scenario_to_dict,
)

__all__ = [
    'ExitCode', 'Scenario', 'cmd_decompose', 'cmd_integrate', 'cmd_plot_data', 'cmd_verify',
    'dump_scenario', 'exit_code_for', 'integral_scenario', 'load_scenario', 'parse_direction',
    'parse_set_spec', 'scenario_from_dict', 'scenario_to_dict',
]
