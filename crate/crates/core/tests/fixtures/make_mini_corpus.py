#!/usr/bin/env python3
"""Regenerate the bundled two-category mini corpus under ./mini_corpus.

Documents mimic the layout of the public newsgroup distribution: an
RFC-822 style header block, an optional attribution line with quoted text,
a free-text body and an optional "--" signature. Output is deterministic.
"""
import os
import random
import shutil

ATHEISM = """atheist atheists atheism evidence reason science argument logic skeptic
morality secular evolution rational proof claim debate existence universe natural
theory fallacy empirical darwin objective burden disprove agnostic materialism
hypothesis experiment physics observe naturalism humanist""".split()

CHRISTIAN = """church jesus christ faith prayer gospel scripture bible worship salvation
sin grace holy spirit lord heaven baptism sermon pastor congregation resurrection
apostle psalm christians savior catholic protestant communion blessing disciple
parish""".split()

SHARED = """god religion people think question time world life book read point thing
believe truth history person word true year example understand discussion group
post answer mean reply matter simply agree problem write opinion certain course
claim view idea human wrong right accept reading meaning""".split()

OWN, OTHER = 0.22, 0.07

STOP = "the is and of a to in that it was for on are with as this be".split()

NAMES = ["alice", "bob", "carol", "dave", "erin", "frank", "grace", "heidi",
         "ivan", "judy", "mallory", "oscar", "peggy", "trent", "victor", "walter"]
SITES = ["rutgers", "cmu", "berkeley", "mit", "stanford", "umich", "cornell", "purdue"]


def word_stream(rng, own, other, n):
    out = []
    for _ in range(n):
        r = rng.random()
        if r < OWN:
            w = rng.choice(own)
        elif r < OWN + OTHER:
            w = rng.choice(other)
        elif r < 0.55:
            w = rng.choice(STOP)
        else:
            w = rng.choice(SHARED)
        out.append(w)
    return out


def sentences(rng, words):
    text, i = [], 0
    while i < len(words):
        k = rng.randint(5, 11)
        chunk = words[i:i + k]
        i += k
        s = " ".join(chunk)
        s = s[0].upper() + s[1:]
        text.append(s + rng.choice([".", ".", "?", "!", ","]))
    lines, line = [], ""
    for s in text:
        if line and len(line) + len(s) > 70:
            lines.append(line.rstrip())
            line = ""
        line += s + " "
    if line:
        lines.append(line.rstrip())
    return lines


def document(rng, own, other, group):
    name = rng.choice(NAMES)
    site = rng.choice(SITES)
    body_words = word_stream(rng, own, other, rng.randint(30, 70))
    lines = [
        f"From: {name}@{site}.edu ({name.title()})",
        f"Subject: Re: {rng.choice(SHARED)} and {rng.choice(own)}",
        f"Organization: {site.title()} University",
        f"Newsgroups: {group}",
    ]
    body = sentences(rng, body_words)
    lines.append(f"Lines: {len(body)}")
    lines.append("")
    if rng.random() < 0.5:
        quoted = word_stream(rng, other, own, rng.randint(8, 20))
        lines.append(f"In article <{rng.randint(1000, 9999)}@{site}.edu> {rng.choice(NAMES)} writes:")
        lines.extend("> " + l for l in sentences(rng, quoted))
        lines.append("")
    lines.extend(body)
    if rng.random() < 0.5:
        lines.append("--")
        lines.append(f"{name.title()} -- {site}.edu")
        lines.append(rng.choice(["All opinions are my own.", "Keep the faith!", "Question everything."]))
    return "\n".join(lines) + "\n"


def main():
    rng = random.Random(20)
    root = os.path.join(os.path.dirname(os.path.abspath(__file__)), "mini_corpus")
    shutil.rmtree(root, ignore_errors=True)
    groups = [("alt.atheism", ATHEISM, CHRISTIAN), ("soc.religion.christian", CHRISTIAN, ATHEISM)]
    for group, own, other in groups:
        d = os.path.join(root, group)
        os.makedirs(d)
        for i in range(100):
            with open(os.path.join(d, str(51000 + i)), "w") as f:
                f.write(document(rng, own, other, group))


if __name__ == "__main__":
    main()
