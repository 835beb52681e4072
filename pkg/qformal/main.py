# main.py - cmdline interface.


import argparse
import logging
import sys
import time

from logging import info, error, debug
from .algebra.main import gns_wrapper
from .app import APP, VERSION
from .bell.main import box_wrapper, chsh_wrapper, ks_verify_wrapper
from .born.main import evolve_wrapper, gleason_fit_wrapper, protocols_wrapper
from .config import Config
from .decoherence.main import decohere_wrapper
from .decoherence.model import DEFAULT_TIME
from .entropy.main import entropy_wrapper
from .io.base import write_result
from .logic.main import lattice_audit_wrapper, lattice_witness_wrapper
from .utils.base import parse_key_value
from .utils.errors import UsageError
from .utils.xlog import init_logging


EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser raising UsageError instead of exiting."""
    def error(self, message):
        raise UsageError(message)


def _global_options():
    p = argparse.ArgumentParser(add_help = False)
    g = p.add_argument_group("global options")
    g.add_argument("--seed", type = int, default = None,
        help = "Seed of the random generator [env QFORMAL_SEED, else 0].")
    g.add_argument("--tol", action = "append", default = [],
        metavar = "KEY=VAL", help = "Override a tolerance, e.g., rank_tol=1e-8.")
    g.add_argument("--unit", choices = ["nats", "bits"], default = None,
        help = "Entropy unit [nats].")
    g.add_argument("--output", choices = ["json", "csv", "pretty"],
        default = None, help = "Result format [json].")
    g.add_argument("--output-path", default = None,
        help = "Write results to this file instead of standard output.")
    g.add_argument("--assert", dest = "assert_mode", action = "store_true",
        help = "Exit with code 1 if an inequality is violated.")
    g.add_argument("--workers", type = int, default = None,
        help = "Number of worker processes [1].")
    g.add_argument("--verbose", action = "store_true",
        help = "Show debugging information.")
    g.add_argument("--log-file", default = None, help = "Optional log file.")
    return(p)


def build_parser():
    common = _global_options()
    parser = ArgumentParser(
        prog = APP,
        description = "Numerical workbench for the mathematical formalism of quantum mechanics."
    )
    parser.add_argument("--version", action = "version",
        version = "%s %s" % (APP, VERSION))
    sub = parser.add_subparsers(dest = "command", metavar = "COMMAND")
    sub.required = True

    def add(name, help):
        return sub.add_parser(name, help = help, parents = [common])

    p = add("entropy", "Entropic quantities and the inequality suite.")
    p.add_argument("--state", help = "State JSON file or built-in name.")
    p.add_argument("--dims", help = "Comma separated subsystem dims, e.g., 2,2,2.")
    p.add_argument("--labels", help = "Comma separated subsystem labels.")
    p.add_argument("--fuzz", type = int, default = None,
        help = "Sweep N random states of --dims.")
    p.add_argument("--hamiltonian", help = "Hamiltonian JSON file (thermal mode).")
    p.add_argument("--beta", type = float, default = 1.0,
        help = "Inverse temperature [1.0].")

    p = add("gns", "GNS representation of a block algebra and a state.")
    p.add_argument("--algebra", required = True,
        help = "Algebra JSON file or block sizes, e.g., 2,1.")
    p.add_argument("--state", required = True,
        help = "State JSON file, or tracial, random, random-pure.")
    p.add_argument("--observable", default = None,
        help = "Block-diagonal matrix JSON file; report its outcome distribution.")

    p = add("gleason-fit", "Fit a density matrix to a ray function.")
    p.add_argument("--samples", help = "Frame sample JSON file.")
    p.add_argument("--dim", type = int, default = None)
    p.add_argument("--ks", help = "Fit the 0/1 valuation of a KS set.")
    p.add_argument("--random", dest = "random_samples", type = int,
        default = None, help = "Fit N random rays of a hidden random state.")

    p = add("protocols", "Forward and backward conditional-probability protocols.")
    p.add_argument("--pa", help = "Projector P_A JSON file.")
    p.add_argument("--pb", help = "Projector P_B JSON file.")
    p.add_argument("--trials", type = int, default = 100000)
    p.add_argument("--random-dim", type = int, default = None,
        help = "Use random projectors in this dimension.")

    p = add("chsh", "CHSH value of a two-qubit state.")
    p.add_argument("--state", default = "singlet")
    p.add_argument("--dirs", default = "canonical",
        help = "canonical, random or a directions JSON file.")
    p.add_argument("--optimize", action = "store_true")
    p.add_argument("--restarts", type = int, default = 32)
    p.add_argument("--classical", action = "store_true",
        help = "Enumerate the 16 deterministic local strategies.")

    p = add("box", "Non-signaling and locality tests of a correlation box.")
    p.add_argument("--pr", action = "store_true", help = "The PR box.")
    p.add_argument("--from-state", dest = "state", default = None)
    p.add_argument("--dirs", default = "canonical")
    p.add_argument("--table", default = None, help = "Box table JSON file.")

    p = add("ks-verify", "Kochen-Specker colouring search.")
    p.add_argument("source", help = "KS set JSON file or cabello18, peres33.")
    p.add_argument("--drop-context", type = int, default = None)

    p = add("lattice", "Quantum logic: lattice audit and witnesses.")
    p.add_argument("action", choices = ["audit", "witness"])
    p.add_argument("source", nargs = "?", default = None,
        help = "Lattice JSON file or boolean3, mo2, o6 (audit).")
    p.add_argument("--dim", type = int, default = 2)
    p.add_argument("--trials", type = int, default = 0,
        help = "Random sweeps in ℂ^dim (witness).")

    p = add("decohere", "Pointer-state overlap against apparatus size.")
    p.add_argument("--dims", default = "8,32,128")
    p.add_argument("--trials", type = int, default = 1000)
    p.add_argument("--time", type = float, default = DEFAULT_TIME)
    p.add_argument("--identical", action = "store_true",
        help = "Control run with H- = H+.")
    p.add_argument("--short-time", action = "store_true",
        help = "Add the short-time slope fit.")

    p = add("evolve", "Schrödinger against Heisenberg picture.")
    p.add_argument("--state", required = True, help = "State vector JSON file.")
    p.add_argument("--observable", required = True)
    p.add_argument("--hamiltonian", required = True)
    p.add_argument("--time", type = float, default = 1.0)

    return(parser)


def make_config(args):
    conf = Config()
    conf.resolve_seed(args.seed)
    for kv in args.tol:
        key, val = parse_key_value(kv)
        conf.set_tolerance(key, val)
    if args.unit is not None:
        conf.entropy_unit = args.unit
    if args.output is not None:
        conf.output = args.output
    conf.output_path = args.output_path
    conf.assert_mode = args.assert_mode
    if args.workers is not None:
        if args.workers < 1:
            raise UsageError("--workers should be >= 1.")
        conf.workers = args.workers
    conf.verbose = args.verbose
    conf.log_file = args.log_file
    return(conf)


def main_core(args, conf):
    cmd = args.command
    if cmd == "entropy":
        return entropy_wrapper(args.state, args.dims, conf, labels = args.labels,
            fuzz = args.fuzz, hamiltonian = args.hamiltonian, beta = args.beta)
    elif cmd == "gns":
        return gns_wrapper(args.algebra, args.state, conf,
            observable = args.observable)
    elif cmd == "gleason-fit":
        return gleason_fit_wrapper(args.samples, args.dim, conf, ks = args.ks,
            random_samples = args.random_samples)
    elif cmd == "protocols":
        return protocols_wrapper(args.pa, args.pb, args.trials, conf,
            random_dim = args.random_dim)
    elif cmd == "chsh":
        return chsh_wrapper(args.state, args.dirs, conf,
            optimize = args.optimize, restarts = args.restarts,
            classical = args.classical)
    elif cmd == "box":
        return box_wrapper(args.pr, args.state, args.dirs, args.table, conf)
    elif cmd == "ks-verify":
        return ks_verify_wrapper(args.source, conf, args.drop_context)
    elif cmd == "lattice":
        if args.action == "audit":
            if args.source is None:
                raise UsageError("lattice audit needs a file or builtin name.")
            return lattice_audit_wrapper(args.source, conf)
        return lattice_witness_wrapper(args.dim, args.trials, conf)
    elif cmd == "decohere":
        return decohere_wrapper(args.dims, args.trials, args.time, conf,
            identical = args.identical, short_time = args.short_time)
    elif cmd == "evolve":
        return evolve_wrapper(args.state, args.observable, args.hamiltonian,
            args.time, conf)
    raise UsageError("unknown command '%s'." % cmd)


def main_run(args, conf):
    """Run one subcommand and write its result.

    Returns
    -------
    int
        The exit code.
    """
    ret = EXIT_INPUT
    start_time = time.time()
    time_str = time.strftime("%Y-%m-%d %H:%M:%S", time.localtime(start_time))
    info("start time: %s." % time_str)

    try:
        _, res = main_core(args, conf)
        write_result(res, conf)
    except UsageError as e:
        error(str(e))
        ret = EXIT_USAGE
    except (OSError, ValueError) as e:
        error("%s: %s" % (type(e).__name__, str(e)))
        error("Running program failed.")
        error("Quiting ...")
        ret = EXIT_INPUT
    else:
        if conf.assert_mode and res.get("violation", False):
            error("violation detected under --assert.")
            ret = EXIT_VIOLATION
        else:
            info("All Done!")
            ret = EXIT_OK
    finally:
        end_time = time.time()
        time_str = time.strftime("%Y-%m-%d %H:%M:%S", time.localtime(end_time))
        info("end time: %s" % time_str)
        info("time spent: %.2fs" % (end_time - start_time, ))

    return(ret)


def dispatch(argv = None):
    """Parse `argv` (default `sys.argv[1:]`), run, and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (APP, str(e)))
        return(EXIT_USAGE)
    except SystemExit as e:       # --help, --version
        return(e.code if isinstance(e.code, int) else EXIT_OK)

    try:
        init_logging(
            log_file = args.log_file,
            stream = sys.stderr,
            ch_level = logging.DEBUG if args.verbose else logging.INFO
        )
    except OSError as e:
        sys.stderr.write("%s: cannot open log file: %s\n" % (APP, str(e)))
        return(EXIT_INPUT)
    try:
        conf = make_config(args)
    except UsageError as e:
        error(str(e))
        return(EXIT_USAGE)

    if conf.verbose:
        info("configuration:")
        conf.show(fp = sys.stderr, prefix = "\t")
    debug("command: %s." % args.command)
    return(main_run(args, conf))


def main():
    sys.exit(dispatch())
