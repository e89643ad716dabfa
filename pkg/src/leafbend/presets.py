"""Named parameter sets reproducing the four model figures.

fig2  Cornu spiral over [0, 7*pi/6]
fig3  elastica with modulus 0.3 over [0, 1]
fig4  Cornu spiral moved to the axial end, unstretched, over [-0.78622, 2.170803]
fig5  as fig4, laterally stretched with weight (l - t)**2
"""

import math

from .curves import Cornu, ElasticaParams, SpiralParams, WeightMode

L_AXIAL = 2.170803
E_FREE = -0.78622

PRESETS = {
    "fig2": SpiralParams(Cornu(), 0.0, 7.0 * math.pi / 6.0, 0.0, WeightMode.END),
    "fig3": ElasticaParams(k=0.3, s_start=0.0, s_end=1.0),
    "fig4": SpiralParams(Cornu(), E_FREE, L_AXIAL, 0.0, WeightMode.END),
    "fig5": SpiralParams(Cornu(), E_FREE, L_AXIAL, 2.0, WeightMode.END),
}


def get_preset(name):
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(
            f"unknown preset {name!r}; choose from {', '.join(sorted(PRESETS))}"
        ) from None
