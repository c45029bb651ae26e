"""Named experiment presets.

``fig1``-``fig4`` are Riemann problems (rarefaction and shock, for positive
and negative cosmological constant) meant to be swept against the flat
lambda=0 baseline; ``fig5``-``fig7`` are static-preservation runs.  Any CLI
command accepts a preset name wherever it accepts a config file path.
"""

_RIEMANN_COMMON = """\
c = 1
n_cells = 400
r_min = 0
r_max = 1
t_end = 0.5
snapshot_times = 0.1, 0.2, 0.3, 0.4, 0.5
cfl = 0.5
mode = conservative
boundary = transmissive
"""

_STATIC_COMMON = """\
c = 1
n_cells = 400
r_min = 0
r_max = 1
t_end = 0.5
snapshot_times = 0.1, 0.2, 0.3, 0.4, 0.5
cfl = 0.5
mode = conservative
"""

PRESETS: dict[str, str] = {
    # Rarefaction and shock data, expanding background (lambda = +1).
    "fig1": "lambda = 1\ninit = riemann(0.2, 0.6, 0.5)\n" + _RIEMANN_COMMON,
    "fig2": "lambda = 1\ninit = riemann(0.6, 0.2, 0.5)\n" + _RIEMANN_COMMON,
    # The same data on a contracting background (lambda = -1).
    "fig3": "lambda = -1\ninit = riemann(0.2, 0.6, 0.5)\n" + _RIEMANN_COMMON,
    "fig4": "lambda = -1\ninit = riemann(0.6, 0.2, 0.5)\n" + _RIEMANN_COMMON,
    # Static-preservation runs (boundary defaults to the matching
    # static_dirichlet, see config.build_run_config).
    "fig5": "lambda = -1\ninit = static(0.5, +)\n" + _STATIC_COMMON,
    "fig6": "lambda = 1\ninit = static(0.5, +)\n" + _STATIC_COMMON,
    "fig7": "lambda = 0\ninit = static(0.9, +)\n" + _STATIC_COMMON,
}
