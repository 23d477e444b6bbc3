"""Command dispatch and bit-stable report emission.

Subcommands:
    compute <file>            run a session file; emit its invariant reports
    verify <scenario> <file>  apply a named scenario to the file's pairs
    explore <config.json>     run the conjecture explorer on a family config
    resolve <file>            emit Betti tables requested by the file

Exit codes: 0 all checks pass; 1 a verification failed; 2 usage/parse error;
3 cap-limited or probabilistic incompleteness where certification was asked.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .errors import DaolabError
from .blowup import assoc_module_presentation, minimal_free_resolution
from .invariants import InvariantConfig, invariant_report
from .scenarios import SCENARIOS, FamilyConfig, explore_conjecture, reproduce_paper_examples
from .session import Command, SessionScript, SyntaxDiagnostic, parse_session

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNCERTIFIED = 3

RING_LEVEL_SCENARIOS = {"regular", "examples"}


def _config_from_args(args) -> InvariantConfig:
    return InvariantConfig(trials=args.trials, cap=args.cap, seed=args.seed)


def _betti_artifact(R, I, name, which):
    pres = assoc_module_presentation(R, I if which == "gr" else R.unit_ideal())
    table = minimal_free_resolution(pres)
    return {
        "type": "betti",
        "target": name if which == "gr" else "rees-ring",
        "kind": which,
        "triples": table.to_json(),
        "regularity": table.regularity,
        "text": table.to_text(),
    }


class SessionRunner:
    """Executes a parsed session against a fixed invariant configuration."""

    def __init__(self, script: SessionScript, config: InvariantConfig):
        self.script = script
        self.config = config
        self.artifacts: list[dict] = []

    def _resolve_pair(self, args):
        """Choose (ring, ideal handle, name) for a command: an explicit ideal
        identifier wins, else the most recent declaration."""
        names = [a for a in args if a in self.script.ideals]
        if names:
            decl = self.script.ideals[names[-1]]
        else:
            pairs = self.script.ideal_pairs()
            if not pairs:
                raise DaolabError("command needs an ideal but none was declared")
            ring, handle, name = pairs[-1]
            return ring, handle, name
        return self.script.rings[decl.ring_name].ring, decl.handle, decl.name

    def run_command(self, cmd: Command):
        if cmd.kind == "compute":
            R, I, name = self._resolve_pair(cmd.args)
            rep = invariant_report(R, I, self.config)
            doc = rep.to_json_dict()
            doc["type"] = "invariant_report"
            doc["ideal_name"] = name
            self.artifacts.append(doc)
        elif cmd.kind == "verify":
            scen_names = [a for a in cmd.args if a in SCENARIOS]
            if not scen_names:
                raise DaolabError(f"verify needs a scenario name, one of {sorted(SCENARIOS)}")
            self.run_scenario(scen_names[0], cmd.args)
        elif cmd.kind == "resolve":
            which = "ring" if "ring" in cmd.args else "gr"
            if which == "gr":
                R, I, name = self._resolve_pair(cmd.args)
            else:
                ring_decls = [s for s in self.script.statements if hasattr(s, "ring")]
                if not ring_decls:
                    raise DaolabError("resolve ring needs a ring declaration")
                R = ring_decls[-1].ring
                I, name = None, "ring"
            self.artifacts.append(_betti_artifact(R, I, name, which))
        elif cmd.kind == "explore":
            fam = _family_from_words(cmd.args, self.config)
            res = explore_conjecture(fam, self.config)
            doc = res.to_json_dict()
            doc["type"] = "scenario"
            self.artifacts.append(doc)
        else:
            raise DaolabError(f"unknown command {cmd.kind!r}")

    def run_scenario(self, scenario: str, args):
        fn = SCENARIOS[scenario]
        if scenario == "examples":
            res = reproduce_paper_examples(self.config)
        elif scenario == "regular":
            ring_decls = [s for s in self.script.statements if hasattr(s, "ring")]
            if not ring_decls:
                raise DaolabError("scenario needs a ring declaration")
            res = fn(ring_decls[-1].ring, config=self.config)
        else:
            R, I, name = self._resolve_pair(args)
            res = fn(R, I, self.config)
        doc = res.to_json_dict()
        doc["type"] = "scenario"
        self.artifacts.append(doc)


def _family_from_words(words, config: InvariantConfig) -> FamilyConfig:
    data: dict = {"seed": config.seed}
    for w in words:
        if "=" not in w:
            continue
        key, val = w.split("=", 1)
        if key in ("vars", "nvars"):
            lo, _, hi = val.partition("..")
            data["nvars"] = [int(lo), int(hi or lo)]
        elif key in ("degs", "degrees"):
            lo, _, hi = val.partition("..")
            data["degrees"] = [int(lo), int(hi or lo)]
        elif key in ("trials", "seed", "dim_min"):
            data[key] = int(val)
        elif key == "family":
            data["family"] = val
        elif key == "mode":
            data["mode"] = val
        elif key == "field":
            data["field"] = val
        elif key == "anomaly_log":
            data["anomaly_log"] = val
    return FamilyConfig.from_json(data)


# --------------------------------------------------------------------------- #
# emission
# --------------------------------------------------------------------------- #


def emit_report(document: dict, fmt: str) -> str:
    """Canonical text: JSON mode has sorted keys and no floating point; text
    mode is a human summary.  Identical inputs and seed give identical bytes."""
    if fmt == "json":
        return json.dumps(document, sort_keys=True, indent=2) + "\n"
    lines = []
    for art in document.get("artifacts", []):
        kind = art.get("type")
        if kind == "invariant_report":
            inv = art["invariants"]
            lines.append(f"== invariant report: ideal {art.get('ideal_name', '?')} ==")
            lines.append(f"ring: {art['ring']['field']}[{','.join(art['ring']['variables'])}]"
                         + (f"/({', '.join(art['ring']['relations'])})" if art["ring"]["relations"] else "")
                         + f" {art['ring']['mode']}")
            lines.append(f"ideal: ({', '.join(art['ideal']['generators'])})")
            for k in ("d1", "d2", "d3"):
                v = inv[k]
                lines.append(f"  {k} = {v['value']}  [{v['certificate']['kind']}]")
            s = inv["s_of_m"]
            lines.append(f"  s(m) = {s['s']}  [{s['certificate']['kind']}]"
                         + (f"  witness: {s['witness']}" if s.get("witness") else ""))
            red = inv["reduction"]
            lines.append(f"  reduction of m: {red['value']}" + (f", r = {red['r']}" if red.get("r") is not None else ""))
            if inv.get("regularity"):
                regs = inv["regularity"]
                lines.append(f"  reg Rees ring = {regs.get('rees_ring')}, reg extended module = {regs.get('rees_module')}")
            if inv.get("dao_components"):
                comps = ", ".join(f"k={c['k']}:{c['dim']}" for c in inv["dao_components"])
                lines.append(f"  torsion component dims: {comps}")
            for c in art.get("checks", []):
                lines.append(f"  check {c['name']}: {c['status']}")
        elif kind == "scenario":
            lines.append(f"== scenario: {art['scenario']} ==")
            for c in art["claims"]:
                lines.append(f"  [{c['status']}] {c['name']}")
            lines.append(f"  verified: {art['verified']}")
        elif kind == "betti":
            lines.append(f"== betti table: {art['kind']} ({art['target']}) ==")
            lines.append(art["text"])
            lines.append(f"regularity: {art['regularity']}")
        lines.append("")
    return "\n".join(lines)


def _write_out(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".daolab-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _exit_code(artifacts: list, demand_certification: bool) -> int:
    """1 on any failed claim; 3 when certification was demanded (verify) and
    a passing scenario rests on capped or probabilistic inputs."""
    failed = False
    uncertified = False
    for art in artifacts:
        if art.get("type") == "scenario":
            for c in art.get("claims", []):
                if c.get("status") == "fail":
                    failed = True
            if not art.get("verified", True):
                uncertified = True
        if art.get("type") == "invariant_report":
            for c in art.get("checks", []):
                if c.get("status") == "fail":
                    failed = True
    if failed:
        return EXIT_FAILED
    if uncertified and demand_certification:
        return EXIT_UNCERTIFIED
    return EXIT_OK


# --------------------------------------------------------------------------- #
# argument parsing and dispatch
# --------------------------------------------------------------------------- #


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=8)
    common.add_argument("--cap", type=int, default=12)
    common.add_argument("--out", default=None)
    p = argparse.ArgumentParser(
        prog="daolab", description=__doc__, parents=[common],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="subcommand", required=True)
    pc = sub.add_parser("compute", parents=[common], help="run a session file and emit invariant reports")
    pc.add_argument("file")
    pv = sub.add_parser("verify", parents=[common], help="apply a scenario to the pairs declared in a file")
    pv.add_argument("scenario", choices=sorted(SCENARIOS))
    pv.add_argument("file")
    pe = sub.add_parser("explore", parents=[common], help="run the conjecture explorer on a JSON family config")
    pe.add_argument("config")
    pr = sub.add_parser("resolve", parents=[common], help="emit Betti tables requested by a session file")
    pr.add_argument("file")
    return p


def _load_session(path: str) -> SessionScript:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_session(fh.read())


def run(argv) -> int:
    """Entry point used by main(); returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    config = _config_from_args(args)
    document = {
        "schema": "daolab.run.v1",
        "config": config.to_json(),
        "subcommand": args.subcommand,
        "artifacts": [],
    }
    try:
        if args.subcommand in ("compute", "resolve"):
            script = _load_session(args.file)
            runner = SessionRunner(script, config)
            commands = script.commands
            if args.subcommand == "resolve":
                commands = [c for c in commands if c.kind == "resolve"]
                if not commands:
                    commands = [Command("resolve", ["gr", name], 0) for (_, _, name) in script.ideal_pairs()]
            elif not any(c.kind == "compute" for c in commands):
                commands = commands + [
                    Command("compute", ["dao", name], 0) for (_, _, name) in script.ideal_pairs()
                ]
            for cmd in commands:
                runner.run_command(cmd)
            document["artifacts"] = runner.artifacts
        elif args.subcommand == "verify":
            script = _load_session(args.file)
            runner = SessionRunner(script, config)
            if args.scenario in RING_LEVEL_SCENARIOS or not script.ideal_pairs():
                runner.run_scenario(args.scenario, [])
            else:
                for _, _, name in script.ideal_pairs():
                    runner.run_scenario(args.scenario, [name])
            document["artifacts"] = runner.artifacts
        elif args.subcommand == "explore":
            with open(args.config, "r", encoding="utf-8") as fh:
                fam = FamilyConfig.from_json(json.load(fh))
            res = explore_conjecture(fam, config)
            doc = res.to_json_dict()
            doc["type"] = "scenario"
            document["artifacts"] = [doc]
    except SyntaxDiagnostic as exc:
        sys.stderr.write(exc.render() + "\n")
        return EXIT_USAGE
    except (DaolabError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    _write_out(emit_report(document, args.format), args.out)
    return _exit_code(document["artifacts"], demand_certification=args.subcommand == "verify")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
