#!/usr/bin/env python3
"""How the resolution limit scales with noise, and how good the low-noise
shortcut is.

Prints, over a ladder of noise powers: the ratio ARL/sigma (flat in the
low-noise regime), the expansion parameter x = 4|A|c0/B^2, and the relative
deviation of the low-noise approximation from the closed form (about x/8).
"""

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from arlkit.config import ExperimentConfig, build_scenario, load_config
from arlkit.linearize import linear_coeffs
from arlkit.solver import arl_closed_form, arl_low_noise
from arlkit.validate import expansion_parameter


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--config", type=Path, default=None)
    parser.add_argument("--decades", type=float, default=8.0)
    parser.add_argument("--points", type=int, default=17)
    args = parser.parse_args()

    config = load_config(args.config) if args.config else ExperimentConfig()
    scenario = build_scenario(config)

    print(f"{'sigma^2':>12}  {'ARL':>13}  {'ARL/sigma':>13}  {'x=4|A|c0/B^2':>13}  "
          f"{'|ARLe-ARL|/ARL':>14}")
    top = 1.0 / config.sweep.inv_sigma2_start
    for sigma2 in np.logspace(math.log10(top), math.log10(top) - args.decades, args.points):
        coeffs = linear_coeffs(scenario.with_sigma2(float(sigma2)))
        closed = arl_closed_form(coeffs)
        shortcut = arl_low_noise(coeffs)
        print(f"{sigma2:12.3e}  {closed:13.6e}  {closed / math.sqrt(sigma2):13.9f}  "
              f"{expansion_parameter(coeffs):13.3e}  {abs(shortcut - closed) / closed:14.3e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
