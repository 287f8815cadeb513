#!/usr/bin/env python3
"""Render the CSV artifacts emitted by the entangler CLI.

Usage:
    entangler gates   --out gates.csv
    entangler scatter --out scatter.csv
    entangler classical --portrait-out portrait.csv
    python3 docs/plot.py gates.csv scatter.csv portrait.csv

Each file is dispatched on its header and saved next to it as <name>.png.
"""
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def plot_gates(df, out):
    fig, (top, bottom) = plt.subplots(2, 1, figsize=(7, 8), sharex=True)
    angle = df.columns[0]
    top.plot(df[angle], df["P01_ent"], label="entangling P(|0,1>)")
    top.plot(df[angle], df["P01_non"], label="non-entangling P(|0,1>)")
    top.plot(df[angle], df["tvd"], "--", label="total-variation distance")
    top.set_ylabel("probability")
    top.legend()
    bottom.plot(df[angle], df["probA1_ent"], label="entangling Prob_A(|1>)")
    bottom.plot(df[angle], df["probA1_non"], label="non-entangling Prob_A(|1>)")
    bottom.set_xlabel(f"{angle} [rad]")
    bottom.set_ylabel("qubit-A marginal")
    bottom.legend()
    fig.savefig(out, dpi=150, bbox_inches="tight")


def plot_scatter(df, out):
    fig, (top, bottom) = plt.subplots(2, 1, figsize=(7, 8), sharex=True)
    top.semilogx(df["k"], df["argR"])
    top.set_ylabel("arg R [rad]")
    bottom.semilogx(df["k"], df["R2"], label="|R|^2")
    bottom.semilogx(df["k"], df["T2"], label="|T|^2")
    bottom.set_xlabel("k [1/w0]")
    bottom.set_yscale("log")
    bottom.legend()
    fig.savefig(out, dpi=150, bbox_inches="tight")


def plot_portrait(df, out):
    fig, ax = plt.subplots(figsize=(7, 5))
    for (er, regime), group in df.groupby(["er", "regime"]):
        style = "--" if regime == "separatrix" else "-"
        # below-separatrix contours come as two disjoint branches
        for _, branch in group.groupby((group["x"].diff() < 0).cumsum()):
            ax.plot(branch["x"], branch["p"], style, color="C0" if regime == "separatrix" else None)
            ax.plot(branch["x"], -branch["p"], style, color=ax.lines[-1].get_color())
    ax.set_xlabel("x [w0]")
    ax.set_ylabel("p [sqrt(m E0)]")
    fig.savefig(out, dpi=150, bbox_inches="tight")


DISPATCH = [
    ("P11_ent", plot_gates),
    ("argR", plot_scatter),
    ("regime", plot_portrait),
]


def main(paths):
    for path in paths:
        df = pd.read_csv(path)
        for marker, renderer in DISPATCH:
            if marker in df.columns:
                out = path.rsplit(".", 1)[0] + ".png"
                renderer(df, out)
                print(f"{path} -> {out}")
                break
        else:
            print(f"{path}: unrecognized header, skipped")


if __name__ == "__main__":
    main(sys.argv[1:])
