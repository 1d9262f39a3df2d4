#!/usr/bin/env python3
"""Generate the 50-document stats fixture (corpus, lexicon, resource).

Deterministic: the seed is fixed so the committed files can be regenerated.
"""
import random
import sys
from pathlib import Path

NPS = [
    "bone/NOUN marrow/NOUN cells/NOUN/cell",
    "immature/ADJ bone/NOUN marrow/NOUN cells/NOUN",
    "bone/NOUN marrow/NOUN",
    "inflammatory/ADJ reaction/NOUN",
    "inflammatory/ADJ response/NOUN",
    "immune/ADJ response/NOUN",
    "strong/ADJ immune/ADJ response/NOUN",
    "object/NOUN software/NOUN",
    "object/NOUN oriented/ADJ software/NOUN",
    "Object-oriented/ADJ software/NOUN",
    "object/NOUN oriented/ADJ software/NOUN testing/NOUN",
    "energy/NOUN balance/NOUN",
    "Energy/NOUN balance/NOUN",
    "heat/NOUN balance/NOUN",
    "energy/NOUN equilibrium/NOUN",
    "city/NOUN traffic/NOUN signal/NOUN data/NOUN acquisition/NOUN system/NOUN",
    "traffic/NOUN signals/NOUN",
    "data/NOUN acquisition/NOUN system/NOUN",
    "signal/NOUN acquisition/NOUN",
    "oral/ADJ tumor/NOUN cell/NOUN proliferation/NOUN activity/NOUN influence/NOUN",
    "tumor/NOUN cell/NOUN proliferation/NOUN",
    "tumour/NOUN cell/NOUN proliferation/NOUN",
    "cell/NOUN proliferation/NOUN",
    "neural/ADJ network/NOUN",
    "artificial/ADJ neural/ADJ network/NOUN",
    "deep/ADJ neural/ADJ networks/NOUN",
    "neural/ADJ net/NOUN",
    "protein/NOUN structure/NOUN",
    "protein/NOUN secondary/ADJ structure/NOUN",
    "gene/NOUN expression/NOUN",
    "gene/NOUN expression/NOUN level/NOUN",
    "high/ADJ gene/NOUN expression/NOUN",
    "blood/NOUN pressure/NOUN",
    "high/ADJ blood/NOUN pressure/NOUN",
    "systolic/ADJ blood/NOUN pressure/NOUN",
    "blood/NOUN flow/NOUN",
    "cerebral/ADJ blood/NOUN flow/NOUN",
    "learning/VERB_ING rate/NOUN",
    "adaptive/ADJ learning/VERB_ING rate/NOUN",
    "Paris/PROPN hospital/NOUN",
]

DETS = ["the/DET", "a/DET", "these/DET", "an/DET"]
VERBS = ["is/OTHER studied/OTHER", "was/OTHER measured/OTHER", "improves/OTHER",
         "depends/OTHER on/PREP", "affects/OTHER", "increases/OTHER"]
FILLER = ["in/PREP", "with/PREP", "and/CONJ", "or/CONJ", "12/NUM", "3/NUM",
          "x/NOUN", "for/PREP"]


def np_tokens(rng):
    toks = rng.choice(NPS).split()
    if rng.random() < 0.4:
        toks = [rng.choice(DETS)] + toks
    return toks


def sentence(rng):
    shape = rng.randrange(5)
    out = []
    if shape == 0:
        out += np_tokens(rng) + rng.choice(VERBS).split() + np_tokens(rng)
    elif shape == 1:
        out += np_tokens(rng) + ["of/PREP"] + np_tokens(rng)
        out += rng.choice(VERBS).split() + np_tokens(rng)
    elif shape == 2:
        out += np_tokens(rng) + ["of/PREP"] + np_tokens(rng) + ["of/PREP"] + np_tokens(rng)
    elif shape == 3:
        out += [rng.choice(FILLER)] + np_tokens(rng) + [rng.choice(FILLER)] + np_tokens(rng)
    else:
        out += np_tokens(rng) + ["and/CONJ"] + np_tokens(rng) + rng.choice(VERBS).split()
    out.append("./OTHER")
    return " ".join(out)


def main(outdir):
    rng = random.Random(20061016)
    outdir = Path(outdir)
    blocks = []
    for i in range(50):
        lines = [f"#DOC d{i + 1:02d}"]
        if i % 3 == 0:
            lines.append(f"#META year={2005 + i % 2}")
            lines.append(f"#META title=Abstract {i + 1}")
        for _ in range(rng.randrange(1, 5)):
            lines.append(sentence(rng))
        blocks.append("\n".join(lines))
    (outdir / "corpus.txt").write_text("\n\n".join(blocks) + "\n")

    (outdir / "lexicon.tsv").write_text(
        "# word1\tword2\n"
        "reaction\tresponse\n"
        "network\tnet\n"
        "tumor\ttumour\n"
        "balance\tequilibrium\n"
        "heat\twarmth\n"
        "rate\tspeed\n")

    resource = [
        "signal", "traffic", "acquisition", "system", "activity", "cell",
        "influence", "proliferation", "software", "network", "blood",
        "pressure", "expression", "heat", "marrow",
        "bone marrow", "bone marrow cell", "inflammatory reaction",
        "neural network", "blood pressure", "gene expression",
        "energy balance", "object software", "cell proliferation",
        "Dementia, Alzheimer Type", "masculine-feminine", "clean and unclean",
        "tumor cell", "data acquisition", "protein structure",
    ]
    (outdir / "resource.txt").write_text("\n".join(resource) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
