"""Time the compiled admissibility kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends run on identical bitmask encodings of the decision
frameworks' ABA translations, and their answers are compared.
"""

import argparse
import random
import timeit

from argdec import D, PS, SD, WD, _kernel
from argdec import _kernels_py as python_kernels
from argdec.aba import _Encoded, attack_neighbourhood
from argdec.generators import all_adfs, random_pdf
from argdec.mappings import criterion_aba


def workloads():
    """(name, [(sup, att, start, nbits), ...]) query batches."""
    batches = []
    for name, contexts, criteria in [
        ("3x3 ADFs, SD/D/WD", list(all_adfs(3, 3))[::8], (SD, D, WD)),
        ("random PDFs, PS", [random_pdf(random.Random(i)) for i in range(40)], (PS,)),
    ]:
        queries = []
        for ctx in contexts:
            for c in criteria:
                mapped = criterion_aba(ctx, c)
                af = mapped.framework
                for d in mapped.decisions:
                    support = mapped.query(d).support
                    enc = _Encoded(af, attack_neighbourhood(af, support))
                    queries.append((enc.sup, enc.att, enc.mask(support), enc.size))
        batches.append((name, queries))
    return batches


def run(kernels, queries):
    return [kernels.find_admissible(sup, att, start, nbits) for sup, att, start, nbits in queries]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    compiled = _kernel.compiled_kernels
    if compiled is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    print(f"{'workload':<22}{'queries':>9}{'python ms':>12}{'compiled ms':>13}{'speed-up':>10}")
    for name, queries in workloads():
        queries = [q for q in queries if q[3] <= 64]
        assert [r >= 0 for r in run(compiled, queries)] == [r >= 0 for r in run(python_kernels, queries)]
        slow = min(timeit.repeat(lambda: run(python_kernels, queries), number=1, repeat=args.repeat))
        fast = min(timeit.repeat(lambda: run(compiled, queries), number=1, repeat=args.repeat))
        print(f"{name:<22}{len(queries):>9}{slow * 1e3:>12.2f}{fast * 1e3:>13.2f}{slow / fast:>9.1f}x")


if __name__ == "__main__":
    main()
