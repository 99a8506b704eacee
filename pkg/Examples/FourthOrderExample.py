import os
from datetime import datetime

import matplotlib.pyplot as plt
import numpy as np

from SturmLiouville import Interval, boundary_difference_vanishes, example_order4, order4_family
from SturmLiouville.Cli.Expression import parse_polynomial
from SturmLiouville.HighOrder import PRINTED_EIGENVALUE

import argparse


# parse args
parser = argparse.ArgumentParser()
parser.add_argument("--n_max", type=int, default=6)
parser.add_argument("--a2", type=str, default=None, help="free coefficient of the p = 1 family, e.g. 'x^2'")
parser.add_argument("--degree_bound", type=int, default=8)
args = parser.parse_args()


# hyper params
n_max = args.n_max
logdir = f"logs/fourth_order/{datetime.now().strftime('%Y-%m-%d_%H-%M-%S')}"
os.makedirs(logdir, exist_ok=True)

# the system, either the built-in example or a member of its family
if args.a2 is None:
    system, formula = example_order4()
else:
    system = order4_family(parse_polynomial(args.a2))
    formula = system.eigenvalue_formula()
print(system)
for text, residual in system.residuals():
    print(f"{text} = {residual.to_text()}")

# eigenvalues next to the printed variant
print(" n   lambda_n   printed")
for n in range(n_max + 1):
    print(f"{n:2d} {str(formula(n)):>10} {str(PRINTED_EIGENVALUE(n)):>9}")

# boundary concomitant on [-1, 1]
vanishes, witness = boundary_difference_vanishes(system.boundary(), Interval.closed(-1, 1), args.degree_bound)
print(f"boundary difference vanishes up to degree {args.degree_bound}: {vanishes}")
if witness is not None:
    print(f"witness: u = x^{witness.i}, y = x^{witness.j}, difference {witness.difference}")

# plot the monic eigenpolynomials
L = system.operator()
xs = np.linspace(-1, 1, 1_000)
fig, ax = plt.subplots(1, 1, figsize=(15, 10))
for n in range(n_max + 1):
    P = L.monic_eigenpolynomial(n).eigenpolynomial
    assert L(P) == P.scale(formula(n)), f"L(P_{n}) != lambda_{n} P_{n}"
    ax.plot(xs, np.polyval([float(c) for c in reversed(P.coefficients)], xs), label=f"$P_{n}$, $\\lambda={formula(n)}$")
ax.plot(xs, np.zeros_like(xs), color="black", linewidth=0.5)
ax.legend()
ax.set_title("monic eigenpolynomials of the fourth-order operator")
plt.tight_layout()
plt.savefig(f"{logdir}/eigenpolynomials.png")
plt.clf()
