"""From raw series to symbolic word, one stage at a time.

A short walk through the pipeline: normalize a series, average it down
to a handful of block means, then map each mean to a letter using
equiprobable regions of the standard normal.  Every stage is printed so
the numbers can be followed by hand.
"""

import numpy as np

from trendsax import make_alphabet_table, paa, segment, symbolize, znormalize


def show(label, values):
    print(f"  {label:<12} " + "  ".join(f"{v:7.3f}" for v in values))


def main():
    rng = np.random.default_rng(7)
    series = np.cumsum(rng.standard_normal(16))
    print("A 16-point random walk, reduced to a 4-symbol word:\n")
    show("raw", series)

    z = znormalize(series)
    show("normalized", z)
    print(f"\n  mean {z.mean():+.2e}, population variance {z.var():.6f}\n")

    seg = segment("classic", n=16, m=4)
    means = paa(z, seg)
    print("  blocks      " + "   ".join(str(b.tolist()) for b in seg.blocks))
    show("block means", means.means)

    for alphabet_size in (3, 5, 8):
        table = make_alphabet_table(alphabet_size)
        word = symbolize(means, table)
        cuts = ", ".join(f"{b:+.3f}" for b in table.breakpoints)
        print(f"\n  alphabet {alphabet_size}: word '{word.to_letters()}'   (cuts at {cuts})")

    print("\nCoarser alphabets blur detail; finer ones track the walk more closely.")


if __name__ == "__main__":
    main()
