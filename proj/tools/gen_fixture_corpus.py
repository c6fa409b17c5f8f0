#!/usr/bin/env python3
"""Generates the deterministic Python fixture corpus used by the test suites.

Usage: gen_fixture_corpus.py OUT_DIR [--files N] [--seed S]

The programs are synthetic but shaped like everyday application code:
classes with methods and decorators, docstrings, comments (including '#'
inside string literals), bracketed continuation lines, mixed indentation
widths and a few tab-indented files.
"""

import argparse
import os
import random

NOUNS = ["user", "order", "item", "record", "node", "event", "token", "buffer",
         "session", "request", "config", "metric", "message", "account", "job",
         "task", "entry", "frame", "packet", "layer", "shape", "point", "edge"]
VERBS = ["load", "save", "parse", "build", "update", "compute", "render",
         "validate", "merge", "split", "fetch", "process", "collect", "apply",
         "reset", "encode", "decode", "flush", "check", "scan"]
MODULES = ["os", "sys", "json", "re", "math", "time", "logging", "random",
           "itertools", "functools", "collections", "pathlib", "typing"]
PACKAGES = ["app", "core", "utils", "services", "models", "api", "io", "lib"]


class Writer:
    def __init__(self, unit):
        self.unit = unit
        self.depth = 0
        self.lines = []

    def line(self, text=""):
        if text:
            self.lines.append(self.unit * self.depth + text)
        else:
            self.lines.append("")

    def indent(self):
        self.depth += 1

    def dedent(self):
        self.depth -= 1

    def text(self):
        return "\n".join(self.lines) + "\n"


def ident(rng):
    return rng.choice(VERBS) + "_" + rng.choice(NOUNS)


def name(rng):
    n = rng.choice(NOUNS)
    return n if rng.random() < 0.6 else n + "s"


def expr(rng, names):
    pick = rng.random()
    v = rng.choice(names)
    if pick < 0.2:
        return f"{v} + {rng.randint(1, 9)}"
    if pick < 0.35:
        return f"len({v})"
    if pick < 0.5:
        return f"{v}[{rng.randint(0, 3)}]"
    if pick < 0.6:
        return f"self.{rng.choice(NOUNS)}" if "self" in names else f"{v} * 2"
    if pick < 0.7:
        return f"{ident(rng)}({v})"
    if pick < 0.8:
        return f'"{rng.choice(NOUNS)}"'
    if pick < 0.9:
        return f"{v} is not None"
    return v


def statement_block(w, rng, names, depth_left, first=True):
    kind = rng.random()
    if kind < 0.16 and depth_left > 0:
        bound = rng.choice(["10", "n", "len(items)", "len(self.items)" if "self" in names else "count",
                            "1, n", "0, len(data), 2", "size", "3"])
        w.line(f"for i in range({bound}):")
        w.indent()
        for k in range(rng.randint(1, 3)):
            statement_block(w, rng, names + ["i"], depth_left - 1, k == 0)
        w.dedent()
    elif kind < 0.26 and depth_left > 0:
        w.line(f"if {expr(rng, names)}:")
        w.indent()
        statement_block(w, rng, names, depth_left - 1)
        if rng.random() < 0.3:
            w.line("return True")
        w.dedent()
        if rng.random() < 0.4:
            w.line("else:")
            w.indent()
            statement_block(w, rng, names, depth_left - 1)
            w.dedent()
    elif kind < 0.33 and depth_left > 0:
        var = rng.choice(NOUNS)
        w.line(f"for {var} in {rng.choice(names)}:")
        w.indent()
        statement_block(w, rng, names + [var], depth_left - 1)
        w.dedent()
    elif kind < 0.38 and depth_left > 0:
        w.line("try:")
        w.indent()
        statement_block(w, rng, names, depth_left - 1)
        w.dedent()
        w.line(f"except {rng.choice(['ValueError', 'KeyError', 'OSError', 'Exception'])} as exc:")
        w.indent()
        w.line(f"logger.warning(\"failed to {rng.choice(VERBS)} %s\", exc)")
        if rng.random() < 0.5:
            w.line("raise")
        w.dedent()
    elif kind < 0.44:
        # bracketed continuation
        target = rng.choice(NOUNS)
        w.line(f"{target} = {ident(rng)}(")
        w.indent()
        for keyword in rng.sample(NOUNS, rng.randint(2, 4)):
            w.line(f"{keyword}={expr(rng, names)},")
        w.dedent()
        w.line(")")
        names.append(target)
    elif kind < 0.49:
        w.line(f"# {rng.choice(VERBS)} the {rng.choice(NOUNS)} before returning")
        w.line(f"{rng.choice(NOUNS)} = {expr(rng, names)}  # see {rng.choice(NOUNS)}")
    elif kind < 0.53:
        w.line(f"label = \"#{rng.choice(NOUNS)} # not a comment\"")
    elif kind < 0.57:
        w.line(f"result = [{rng.choice(NOUNS)} for {rng.choice(NOUNS)} in {rng.choice(names)}]")
    elif kind < 0.62:
        w.line(f"logger.debug(\"{rng.choice(VERBS)} %d {rng.choice(NOUNS)}s\", {expr(rng, names)})")
    elif kind < 0.67:
        w.line(f"{rng.choice(names)}.append({expr(rng, names)})")
    elif kind < 0.71:
        w.line("return True")
    elif kind < 0.74:
        w.line("return None")
    elif kind < 0.78:
        w.line(f"mapping = {{\"{rng.choice(NOUNS)}\": {expr(rng, names)}, \"{rng.choice(NOUNS)}\": {rng.randint(0, 99)}}}")
    elif kind < 0.82:
        w.line(f"value = {expr(rng, names)} if {rng.choice(names)} else {rng.randint(0, 5)}")
    elif kind < 0.85 and not first:
        w.line("")
    else:
        target = rng.choice(NOUNS)
        w.line(f"{target} = {expr(rng, names)}")
        names.append(target)


def function(w, rng, fname, params, is_method):
    if rng.random() < 0.2:
        w.line(rng.choice(["@staticmethod" if not is_method else "@property",
                           "@functools.lru_cache(maxsize=None)", "@log_calls"]))
        if w.lines[-1].strip() == "@staticmethod" and is_method:
            params = params[1:]
    w.line(f"def {fname}({', '.join(params)}):")
    w.indent()
    if rng.random() < 0.5:
        w.line(f'"""{rng.choice(VERBS).capitalize()} the {rng.choice(NOUNS)}.')
        if rng.random() < 0.5:
            w.line("")
            w.line(f"Returns the {rng.choice(NOUNS)} # of {rng.choice(NOUNS)}s.")
        w.line('"""')
    names = [p.split("=")[0] for p in params] or ["data"]
    for k in range(rng.randint(2, 7)):
        statement_block(w, rng, list(names), 2, k == 0)
    w.line(f"return {expr(rng, names)}")
    w.dedent()


def klass(w, rng):
    cname = rng.choice(NOUNS).capitalize() + rng.choice(["Manager", "Service", "Store", "Handler", "Builder"])
    base = rng.choice(["", "(object)", "(Base)", "(dict)"])
    w.line(f"class {cname}{base}:")
    w.indent()
    if rng.random() < 0.6:
        w.line(f'"""Keeps track of {rng.choice(NOUNS)}s."""')
    w.line("def __init__(self, items=None):")
    w.indent()
    w.line("self.items = items or []")
    w.line(f"self.{rng.choice(NOUNS)} = None")
    w.dedent()
    for _ in range(rng.randint(1, 4)):
        w.line("")
        function(w, rng, ident(rng), ["self", rng.choice(NOUNS)], True)
    w.dedent()


def program(rng, unit):
    w = Writer(unit)
    if rng.random() < 0.5:
        w.line(f'"""{rng.choice(PACKAGES)}.{rng.choice(NOUNS)} helpers."""')
    for mod in sorted(rng.sample(MODULES, rng.randint(1, 4))):
        w.line(f"import {mod}")
    if rng.random() < 0.5:
        w.line(f"from {rng.choice(PACKAGES)}.{rng.choice(NOUNS)} import {rng.choice(NOUNS).capitalize()}")
    w.line("")
    w.line("logger = logging.getLogger(__name__)")
    w.line(f"DEFAULT_{rng.choice(NOUNS).upper()} = {rng.randint(1, 500)}")
    w.line("")
    for _ in range(rng.randint(2, 6)):
        w.line("")
        if rng.random() < 0.4:
            klass(w, rng)
        else:
            params = rng.sample(NOUNS, rng.randint(0, 3))
            if rng.random() < 0.3:
                params.append("n=10")
            function(w, rng, ident(rng), params, False)
    if rng.random() < 0.6:
        w.line("")
        w.line('if __name__ == "__main__":')
        w.indent()
        w.line(f"{ident(rng)}({rng.randint(0, 9)})")
        w.dedent()
    return w.text()


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("out_dir")
    parser.add_argument("--files", type=int, default=220)
    parser.add_argument("--seed", type=int, default=20240101)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    for index in range(args.files):
        unit = rng.choices(["    ", "  ", "\t"], weights=[8, 1, 1])[0]
        pkg = PACKAGES[index % len(PACKAGES)]
        rel = os.path.join(pkg, f"{rng.choice(NOUNS)}_{rng.choice(VERBS)}_{index:03d}.py")
        path = os.path.join(args.out_dir, rel)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w", newline="\n") as f:
            f.write(program(rng, unit))


if __name__ == "__main__":
    main()
