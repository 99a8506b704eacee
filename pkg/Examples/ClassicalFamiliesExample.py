import os
from datetime import datetime

import matplotlib.pyplot as plt
import numpy as np

from SturmLiouville import ListCallback, TensorboardCallback, cross_validate, gram_matrix
from SturmLiouville.Cli.Commands import plot_range
from SturmLiouville.Families import family_by_name

import argparse


# parse args
parser = argparse.ArgumentParser()
parser.add_argument("--family", type=str, default="legendre")
parser.add_argument("--n_max", type=int, default=5)
parser.add_argument("--alpha", type=str, default="-2")
parser.add_argument("--beta", type=str, default="0")
parser.add_argument("--kind", type=int, default=1)
parser.add_argument("--c", type=str, default="2")
parser.add_argument("--numeric", action="store_true")
args = parser.parse_args()


# hyper params
n_max = args.n_max
params = {"jacobi": {"alpha": args.alpha, "beta": args.beta},
          "chebyshev": {"kind": args.kind},
          "confluent": {"c": args.c}}.get(args.family, {})
logdir = f"logs/classical_families/{args.family}/{datetime.now().strftime('%Y-%m-%d_%H-%M-%S')}"
os.makedirs(logdir, exist_ok=True)

# classify the family and check it against its closed forms
family = family_by_name(args.family, **params)
family.check_family(n_max)
rec = family.classify()
print(f"{family.name}: {rec.case_tag.value} / {rec.mode.value} on {rec.interval.display()}")
print(f"weight: {rec.weight.display()}")
assert rec.is_admissible, f"{family.name} is not admissible: {rec.reason}"

# exact eigenpairs and Gram matrix
pairs = rec.operator().eigenpairs(n_max)
for pair in pairs:
    print(f"P_{pair.degree} = {pair.eigenpolynomial.to_text()}    lambda = {pair.eigenvalue}")
gram = gram_matrix(rec, n_max)
print("norms relative to mu0:", ", ".join(str(d) for d in gram.diagonal()))

# numeric mirror, logged to tensorboard
if args.numeric:
    callback = ListCallback([TensorboardCallback(logdir, prefix=family.name)])
    cv = cross_validate(rec, n_max, callback=callback)
    print(f"numeric mirror: max deviation {cv.max_deviation:.3e}, passed {cv.passed}")

# plot the eigenpolynomials, normalized to unit norm, on top of the weight
lo, hi = plot_range(rec.interval)
eps = 1e-3 * (hi - lo)
xs = np.linspace(lo + eps if rec.interval.lo_open else lo, hi - eps if rec.interval.hi_open else hi, 1_000)
fig, axs = plt.subplots(1, 2, figsize=(15, 6))
for pair, norm in zip(pairs, gram.diagonal()):
    coeffs = [float(c) for c in reversed(pair.eigenpolynomial.coefficients)]
    axs[0].plot(xs, np.polyval(coeffs, xs) / np.sqrt(float(norm)), label=f"$P_{pair.degree}$")
axs[0].legend()
axs[0].set_title(f"{family.name} eigenpolynomials (unit norm)")

log_weight = np.zeros_like(xs)
for root, exponent in rec.weight.power_factors:
    log_weight += float(exponent) * np.log(np.abs(xs - float(root)))
exp_arg = rec.weight.exp_arg.as_polynomial()
log_weight += np.polyval([float(c) for c in reversed(exp_arg.coefficients)] or [0.0], xs)
axs[1].plot(xs, np.exp(log_weight), color="black")
axs[1].set_title(f"weight ${rec.weight.display()}$")

plt.tight_layout()
plt.savefig(f"{logdir}/eigenpolynomials.png")
plt.clf()
