"""Kernel backend selection.

Imports the compiled kernels when the extension was built, otherwise the
pure-Python twin.  ``CHRONOBOUND_BACKEND`` overrides the choice:

* ``auto`` (default): compiled if available, else pure Python.
* ``compiled``: require the extension; ImportError if missing.
* ``python``: force the pure-Python backend.
"""
import os

_requested = os.environ.get("CHRONOBOUND_BACKEND", "auto").strip().lower()

if _requested in ("auto", "", "compiled"):
    try:
        from . import _kernels_cy as _impl
        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _kernels_py as _impl
        BACKEND = "python"
elif _requested in ("python", "py", "pure"):
    from . import _kernels_py as _impl
    BACKEND = "python"
else:
    raise ValueError(
        f"unknown CHRONOBOUND_BACKEND value {_requested!r}; "
        "expected 'auto', 'compiled' or 'python'")

dilate = _impl.dilate
contract = _impl.contract
schwarzschild_radius = _impl.schwarzschild_radius
delta_rs_from_delta_e = _impl.delta_rs_from_delta_e
min_delta_rs = _impl.min_delta_rs
dilation_variance = _impl.dilation_variance
full_variance = _impl.full_variance
lower_bound_objective = _impl.lower_bound_objective
constrained_objective_terms = _impl.constrained_objective_terms
constrained_objective = _impl.constrained_objective
optimal_delta_tc = _impl.optimal_delta_tc
optimal_delta_tc_light = _impl.optimal_delta_tc_light
fundamental_bound = _impl.fundamental_bound
fractional_uncertainty = _impl.fractional_uncertainty
salecker_wigner = _impl.salecker_wigner
ng_lloyd = _impl.ng_lloyd
clock_profile = _impl.clock_profile
clock_profile_batch = _impl.clock_profile_batch
