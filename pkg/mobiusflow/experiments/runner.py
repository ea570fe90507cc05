import os
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

from ..utils.logger import Logger
from ..utils.utils_io import make_dirs, write_csv, write_json
from ..utils.utils_translation import TextTranslation
from .config import parse_config
from .scenarios import SCENARIOS

__all__ = ['run_experiment', 'run_acceptance', 'acceptance_configs', 'write_artifacts', 'ACCEPTANCE_REPORT']

ACCEPTANCE_REPORT = 'acceptance.json'


def _version():
    from .. import __version__
    return __version__


def _metadata(result, seed, workers):
    return {'timestamp': datetime.now(timezone.utc).isoformat(), 'version': _version(), 'seed': int(seed),
            'workers': int(workers), 'theorem': result.theorem}


def write_artifacts(result, config, out_dir, seed, workers=1):
    """ Write <out>/<scenario>.json and one <out>/<scenario>_<table>.csv per table.

    Returns
    -------
    dict
        Returns the JSON report.
    """
    make_dirs(out_dir)
    report = result.report(config.model_dump(), _metadata(result, seed, workers))
    write_json(report, os.path.join(out_dir, '%s.json' % result.name))
    for table, frame in sorted(result.tables.items()):
        write_csv(frame, os.path.join(out_dir, '%s_%s.csv' % (result.name, table)), result.name, table)
    return report


def run_experiment(config, out_dir=None, seed=None, workers=1):
    """ Run the scenario of a configuration and write its artifacts.

    Parameters
    ----------
    config : ExperimentConfig
        Validated configuration.

    out_dir : str
        Output directory, ``config.output`` when None.

    seed : int
        Seed override, ``config.quadrature.seed`` when None.

    workers : int
        Number of processes of the enclosing run (recorded in the metadata).

    Returns
    -------
    tuple
        Returns (ScenarioResult, JSON report).
    """
    out_dir = config.output if out_dir is None else out_dir
    seed = config.quadrature.seed if seed is None else int(seed)
    logger = Logger()
    translation = TextTranslation()
    logger.reset()
    logger.start_measure_time('%s: %s (seed %d)' % (translation.get_str('Log_run'), config.scenario, seed))
    result = SCENARIOS[config.scenario](config, seed)
    logger.stop_measure_time(translation.get_str('Log_done'))
    for check in result.checks:
        logger.log('  %s %s %s %g %s' % (check['name'], check['relation'], check['threshold'], check['value'],
                                         translation.get_str('Log_pass' if check['pass'] else 'Log_fail')))
    report = write_artifacts(result, config, out_dir, seed, workers)
    logger.save_buffer(os.path.join(out_dir, 'info.txt'))
    return result, report


def acceptance_configs():
    """ Built-in configuration of every scenario, in registry order. """
    return [parse_config(scenario.defaults) for scenario in SCENARIOS.values()]


def _run_one(args):
    config, out_dir, seed, workers, quiet = args
    if quiet:
        Logger().log_disable()
    _, report = run_experiment(config, os.path.join(out_dir, config.scenario), seed, workers)
    return report


def run_acceptance(out_dir='acceptance', seed=0, jobs=1):
    """ Run every scenario with its built-in configuration.

    Each scenario writes into <out>/<scenario>/; the summary goes to <out>/acceptance.json.

    Parameters
    ----------
    out_dir : str
        Output directory.

    seed : int
        Seed of every scenario.

    jobs : int
        Number of worker processes, scenarios run in parallel when greater than one.

    Returns
    -------
    dict
        Returns the summary {pass, scenarios: {name: {pass, failures}}, metadata}.
    """
    configs = acceptance_configs()
    logger = Logger()
    logger.log('%s: %d scenarios, %d jobs' % (TextTranslation().get_str('Log_acceptance'), len(configs), jobs))
    tasks = [(config, out_dir, seed, jobs, jobs > 1) for config in configs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            reports = list(executor.map(_run_one, tasks))
    else:
        reports = [_run_one(task) for task in tasks]
    summary = {'pass': all(r['pass'] for r in reports),
               'scenarios': {r['scenario']: {'pass': r['pass'], 'failures': r['failures']} for r in reports},
               'metadata': {'timestamp': datetime.now(timezone.utc).isoformat(), 'version': _version(),
                            'seed': int(seed), 'workers': int(jobs)}}
    write_json(summary, os.path.join(out_dir, ACCEPTANCE_REPORT))
    for r in reports:
        logger.log('%-22s %s' % (r['scenario'], TextTranslation().get_str('Log_pass' if r['pass'] else 'Log_fail')))
    return summary
