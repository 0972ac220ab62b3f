"""Half-ball maximal operators on the hyperbolic plane and Damek-Ricci spaces."""

import json

from ._core import (
    area,
    contains,
    dist_s,
    distance_h2,
    eta_chain_radius,
    eta_kappa,
    lambda_star,
    mc_area,
    nu,
    packing_levels,
    run_cli,
)

__all__ = [
    "area",
    "contains",
    "dist_s",
    "distance_h2",
    "eta_chain_radius",
    "eta_kappa",
    "lambda_star",
    "mc_area",
    "nu",
    "packing_levels",
    "run",
    "run_cli",
]


class ExperimentFailed(RuntimeError):
    def __init__(self, code, detail):
        super().__init__(f"exit {code}: {detail}")
        self.code = code
        self.detail = detail


def run(subcommand, **options):
    """Runs a subcommand and returns its parsed JSON report.

    Options map to flags: run("areas", R=[1, 2]) is `areas --R 1 2`.
    Raises ExperimentFailed on a nonzero exit status.
    """
    args = [subcommand]
    for key, value in options.items():
        args.append("--" + key.replace("_", "-"))
        if isinstance(value, (list, tuple)):
            args.extend(str(v) for v in value)
        else:
            args.append(str(value))
    code, out, err = run_cli(args)
    if code != 0:
        raise ExperimentFailed(code, err.strip())
    return json.loads(out)
