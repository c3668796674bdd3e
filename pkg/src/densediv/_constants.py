"""Shared numeric constants."""

import math

# Euler-Mascheroni constant, 30 digits
EULER_GAMMA_STR = "0.577215664901532860606512090082"
EULER_GAMMA = float(EULER_GAMMA_STR)

# e^{-gamma}, the Buchstab/Mertens limit density
EXP_NEG_GAMMA = math.exp(-EULER_GAMMA)

ZETA2 = math.pi * math.pi / 6.0
