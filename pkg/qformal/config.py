# config.py - global configuration.


import os
import sys


ENV_SEED = "QFORMAL_SEED"


class DefaultConfig:
    """Default tolerances and switches shared by all modules.

    Every operation that thresholds a numerical quantity reads its default
    from here; the command line overrides them per run through
    :class:`Config`.
    """
    def __init__(self):
        self.HERMITICITY_TOL = 1e-10
        self.IDEMPOTENCY_TOL = 1e-10
        self.PSD_TOL = 1e-9
        self.EIG_TOL = 1e-10
        self.RANK_TOL = 1e-10
        self.NORM_TOL = 1e-10
        self.CLUSTER_TOL = 1e-8
        self.GRAM_TOL = 1e-10
        self.VIOLATION_TOL = 1e-9
        self.GLEASON_TOL = 1e-6
        self.RAY_TOL = 1e-9
        self.COMPAT_TOL = 1e-9
        self.ENTROPY_CLAMP = 1e-14
        self.ENTROPY_UNIT = "nats"

        self.SEED = 0
        self.WORKERS = 1
        self.OUTPUT = "json"

    def tolerances(self):
        """Dict of lower-case tolerance name to default value."""
        return({k.lower(): v for k, v in vars(self).items() \
                if k.endswith("_TOL") or k == "ENTROPY_CLAMP"})


class Config:
    """Run configuration of the command-line frontend.

    Attributes
    ----------
    seed : int
        Seed of the counter-based random generator.
        Resolved from `--seed`, then the environment variable
        QFORMAL_SEED, then 0.
    tolerances : dict of {str : float}
        Tolerance profile; keys are the lower-case names of the `*_TOL`
        attributes of :class:`DefaultConfig`, plus "entropy_clamp".
    entropy_unit : {"nats", "bits"}
        Unit of entropies.
    output : {"json", "csv", "pretty"}
        Format of the results written to standard output or `output_path`.
    output_path : str or None, default None
        If not None, write results to this file instead of standard output.
    assert_mode : bool, default False
        If True, inequality violations turn into exit code 1.
    workers : int, default 1
        Number of worker processes for parallelizable experiments.
    verbose : bool, default False
        Whether to show debugging information.
    log_file : str or None, default None
        Optional log file (DEBUG level).
    """
    def __init__(self):
        self.def_conf = DefaultConfig()

        self.seed = self.def_conf.SEED
        self.tolerances = self.def_conf.tolerances()
        self.entropy_unit = self.def_conf.ENTROPY_UNIT
        self.output = self.def_conf.OUTPUT
        self.output_path = None
        self.assert_mode = False
        self.workers = self.def_conf.WORKERS
        self.verbose = False
        self.log_file = None

    def set_tolerance(self, name, value):
        from .utils.errors import UsageError
        key = name.lower()
        if key not in self.tolerances:
            raise UsageError("unknown tolerance '%s'; expect one of %s." % \
                (name, ", ".join(sorted(self.tolerances.keys()))))
        if not value > 0:
            raise UsageError("tolerance '%s' should be positive." % name)
        self.tolerances[key] = float(value)

    def tol(self, name):
        return(self.tolerances[name])

    def resolve_seed(self, seed = None):
        """Set `seed` from the argument, else from QFORMAL_SEED."""
        from .utils.errors import UsageError
        if seed is None:
            seed = os.environ.get(ENV_SEED, None)
        if seed is None:
            seed = self.def_conf.SEED
        try:
            seed = int(seed)
        except (TypeError, ValueError):
            raise UsageError("invalid seed '%s'." % seed)
        if seed < 0 or seed >= 2 ** 64:
            raise UsageError("seed should be a 64-bit unsigned integer.")
        self.seed = seed

    def echo(self):
        """The "config" block echoed into every JSON result."""
        return({
            "seed": self.seed,
            "entropy_unit": self.entropy_unit,
            "tolerances": dict(sorted(self.tolerances.items()))
        })

    def show(self, fp = None, prefix = ""):
        if fp is None:
            fp = sys.stderr

        s =  "%s\n" % prefix
        s += "%sseed = %d\n" % (prefix, self.seed)
        s += "%sentropy_unit = %s\n" % (prefix, self.entropy_unit)
        s += "%soutput = %s\n" % (prefix, self.output)
        s += "%soutput_path = %s\n" % (prefix, self.output_path)
        s += "%sassert = %s\n" % (prefix, self.assert_mode)
        s += "%sworkers = %d\n" % (prefix, self.workers)
        s += "%sverbose = %s\n" % (prefix, self.verbose)
        s += "%slog_file = %s\n" % (prefix, self.log_file)
        s += "%s\n" % prefix

        for k, v in sorted(self.tolerances.items()):
            s += "%s%s = %g\n" % (prefix, k, v)
        s += "%s\n" % prefix

        fp.write(s)
