import json
import os

import numpy as np
import pandas as pd

__all__ = ['make_dirs', 'CSV_VERSION', 'csv_header', 'write_csv', 'read_csv', 'write_json', 'to_jsonable']

CSV_VERSION = 'v1'


def make_dirs(_dir):
    """ Makes directories.

    Parameters
    ----------
    _dir : str
        Path of directory.
    """
    if _dir and not os.path.exists(_dir):
        os.makedirs(_dir)


def csv_header(scenario, table):
    return '# mobiusflow-csv %s scenario=%s table=%s' % (CSV_VERSION, scenario, table)


def write_csv(frame, filename, scenario, table):
    """ Write a table after its versioned header comment line.

    Parameters
    ----------
    frame : pandas.DataFrame
        Table.

    filename : str
        Path of the csv file.

    scenario : str
        Scenario name written in the header.

    table : str
        Table name written in the header.
    """
    make_dirs(os.path.dirname(filename))
    with open(filename, 'w', newline='') as f:
        f.write(csv_header(scenario, table) + '\n')
        frame.to_csv(f, index=False, float_format='%.17g')


def read_csv(filename):
    """ Read a table written by write_csv (the header comment is skipped). """
    return pd.read_csv(filename, comment='#')


def to_jsonable(value):
    """ Convert numpy scalars and arrays (also nested in dicts and lists) to plain Python values. """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if np.isfinite(value) else str(value)
    return value


def write_json(report, filename):
    """ Write a report with sorted keys and a fixed indent. """
    make_dirs(os.path.dirname(filename))
    with open(filename, 'w') as f:
        json.dump(to_jsonable(report), f, sort_keys=True, indent=2)
        f.write('\n')
