"""Command-line entry point.

Subcommands: lexicon, overlap, candidates, extract, combine, evaluate,
kappa, index. Exit status 0 on success, 1 on input/usage errors, 2 on
internal errors. All output files are deterministic (sorted rows, LF
newlines); logs go to stderr only. An optional key=value config file
supplies defaults; explicit flags win.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import candidates as candidates_mod
from . import evaluation, overlap, parse_match, string_match
from .conllu import load_conllu
from .errors import InputError, ParseSourceUnavailable
from .evaluation import fmt_pct, load_extractions, load_gold, save_extractions
from .example_index import ExampleIndex
from .lexicon import intersect, load_lexicon, save_lexicon
from .morphology import Morphology
from .string_match import MatchOptions


class _UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError("%s\n%s" % (message, self.format_usage().strip()))


def _source_name(path, explicit=None):
    if explicit:
        return explicit
    base = os.path.basename(path)
    return base.rsplit(".", 1)[0] if "." in base else base


def _write_lines(path, lines):
    text = "\n".join(lines) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _pretty_table(headers, rows):
    """Aligned-column rendering of a small table."""
    table = [headers] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(headers))]
    lines = []
    for k, row in enumerate(table):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return lines


# ---------------------------------------------------------------- lexicon

def _cmd_lexicon(args):
    lexicons = [
        load_lexicon(p, _source_name(p, args.source if len(args.infile) == 1 else None))
        for p in args.infile
    ]
    if args.intersect:
        result = intersect(lexicons)
    elif len(lexicons) == 1:
        result = lexicons[0]
    else:
        raise _UsageError("multiple --in files require --intersect")
    if args.expand_placeholders:
        from .lexicon import Lexicon, expand_placeholders

        expanded = Lexicon(result.name)
        for entry in result:
            for variant in expand_placeholders(entry):
                expanded.add(variant)
        result = expanded
    save_lexicon(result, args.out)
    print("wrote %d entries to %s" % (len(result), args.out), file=sys.stderr)


# ---------------------------------------------------------------- overlap

def _overlap_lines_tsv(reports, names, with_decisions):
    lines = ["# overlap matrix (%% of row resource%s)"
             % ("; exact+accepted" if with_decisions else "; exact only")]
    lines.append("\t".join(["resource", "size"] + names))
    for a in names:
        row = [a, str(reports[(a, a)].sizes[0])]
        for b in names:
            rep = reports[(a, b)]
            row.append(fmt_pct(rep.percentages(include_accepted=with_decisions)[0]))
        lines.append("\t".join(row))
    lines.append("# pending candidate pairs")
    for a in names:
        for b in names:
            if a != b:
                rep = reports[(a, b)]
                pending = len(rep.candidate_pairs)
                lines.append("%s\t%s\t%d\t%d" % (a, b, pending, rep.accepted_count))
    return lines


def _cmd_overlap(args):
    if len(args.infile) < 2:
        raise _UsageError("overlap needs at least two --in lexicons")
    lexicons = [load_lexicon(p, _source_name(p)) for p in args.infile]
    decisions = overlap.load_decisions(args.decisions) if args.decisions else None
    reports = overlap.overlap_matrix(lexicons, decisions)
    names = [lex.name for lex in lexicons]
    if args.candidates_out:
        # column 3 is the review slot: flip "reject" to "accept" and feed
        # the edited file back through --decisions
        lines = ["# pairA_id\tpairB_id\tdecision\theuristics\tpairA\tpairB"]
        seen = set()
        for a in names:
            for b in names:
                if a == b:
                    continue
                for p in reports[(a, b)].candidate_pairs:
                    if (p.b_id, p.a_id) in seen:
                        continue
                    seen.add((p.a_id, p.b_id))
                    lines.append("%s\t%s\treject\t%s\t%s\t%s" % (
                        p.a_id, p.b_id, ",".join(p.heuristics), p.a_surface, p.b_surface))
        _write_lines(args.candidates_out, lines)
    if args.format == "json":
        payload = {}
        for a in names:
            for b in names:
                rep = reports[(a, b)]
                payload["%s|%s" % (a, b)] = {
                    "exact": rep.exact_count,
                    "accepted": rep.accepted_count,
                    "pending": len(rep.candidate_pairs),
                    "pct": fmt_pct(rep.percentages(include_accepted=bool(decisions))[0]),
                }
        _write_lines(args.out, [json.dumps(payload, indent=2, sort_keys=True)])
    elif args.format == "pretty":
        rows = []
        for a in names:
            rows.append([a, reports[(a, a)].sizes[0]] + [
                fmt_pct(reports[(a, b)].percentages(bool(decisions))[0]) for b in names
            ])
        _write_lines(args.out, _pretty_table(["resource", "size"] + names, rows))
    else:
        _write_lines(args.out, _overlap_lines_tsv(reports, names, bool(decisions)))


# ------------------------------------------------------------- candidates

def _cmd_candidates(args):
    sentences = load_conllu(args.corpus)
    lexicon = load_lexicon(args.lexicon, _source_name(args.lexicon))
    morph = Morphology()
    cands = candidates_mod.extract_candidates(sentences, lexicon, morph)
    candidates_mod.render_annotation_sheet(cands, sentences, args.out, lexicon)
    print("wrote %d candidates to %s" % (len(cands), args.out), file=sys.stderr)


# ---------------------------------------------------------------- extract

def _string_worker(payload):
    sentences, compiled, opts, method = payload
    out = set()
    for sentence in sentences:
        out |= string_match.match_compiled(sentence, compiled, opts, method)
    return out


def _parse_worker(payload):
    sentences, patterns, relax, method, match_articles = payload
    out = set()
    for sentence in sentences:
        for pattern in patterns:
            out.update(
                parse_match.subtree_match(sentence, pattern, relax, method, match_articles)
            )
    return out


def _map_chunks(worker, payloads, jobs):
    if jobs <= 1 or len(payloads) <= 1:
        results = [worker(p) for p in payloads]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, payloads))
    merged = set()
    for r in results:
        merged |= r
    return merged


def _chunked(items, jobs):
    if jobs <= 1 or len(items) < 2 * jobs:
        return [items]
    size = (len(items) + jobs - 1) // jobs
    return [items[i : i + size] for i in range(0, len(items), size)]


def _relax_level(args):
    if args.no_direction:
        return parse_match.NO_DIRECTION
    if args.no_labels:
        return parse_match.NO_LABELS
    return parse_match.FULL


def _cmd_extract(args):
    if args.method != "parse":
        if args.no_labels or args.no_direction or args.in_context or args.match_articles:
            raise _UsageError("relaxation/in-context flags are only valid with --method parse")
    sentences = load_conllu(args.corpus)
    lexicon = load_lexicon(args.lexicon, _source_name(args.lexicon))
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)

    if args.method in ("exact", "fuzzy", "inflect"):
        opts = MatchOptions(args.intervening, args.case_sensitive, args.method.upper())
        morph = Morphology() if args.method == "inflect" else None
        method = string_match.method_tag(opts)
        compiled = string_match.compile_lexicon(lexicon, opts, morph)
        payloads = [
            (chunk, compiled, opts, method) for chunk in _chunked(sentences, jobs)
        ]
        found = _map_chunks(_string_worker, payloads, jobs)
    else:
        if not args.pie_parses:
            raise _UsageError("--method parse requires --pie-parses")
        patterns = _build_patterns(args, lexicon)
        relax = _relax_level(args)
        method = "parse-incontext" if args.in_context else "parse"
        if args.no_direction:
            method += "-nodir"
        elif args.no_labels:
            method += "-nolabels"
        if args.match_articles:
            method += "-articles"
        payloads = [
            (chunk, patterns, relax, method, args.match_articles)
            for chunk in _chunked(sentences, jobs)
        ]
        found = _map_chunks(_parse_worker, payloads, jobs)

    save_extractions(found, args.out)
    print("wrote %d extractions to %s" % (len(set(e.key() for e in found)), args.out),
          file=sys.stderr)


def _build_patterns(args, lexicon):
    parses = load_conllu(args.pie_parses)
    by_entry = {}
    for parse in parses:
        entry_id = parse.meta.get("entry_id", parse.sentence_id)
        by_entry[entry_id] = parse
    index = parse_source = None
    if args.in_context:
        index = ExampleIndex.open(args.in_context)
        parse_source = parse_match.ConlluParseSource(
            os.path.join(args.in_context, "parses.conllu")
        )
    patterns = []
    for entry in lexicon:
        isolated = by_entry.get(entry.id)
        if isolated is None:
            raise InputError(
                "no isolated parse for entry %r in %s" % (entry.id, args.pie_parses)
            )
        if index is not None:
            pattern = parse_match.acquire_in_context(entry, index, parse_source, isolated)
        else:
            pattern = parse_match.build_pattern(entry, isolated)
        patterns.append(pattern)
    return patterns


# ---------------------------------------------------------------- combine

def _cmd_combine(args):
    if len(args.infile) < 2:
        raise _UsageError("combine needs at least two --in extraction files")
    sets = [load_extractions(p) for p in args.infile]
    merged = evaluation.combine_union(sets)
    save_extractions(merged, args.out)
    print("wrote %d combined extractions to %s" % (len(merged), args.out), file=sys.stderr)


# --------------------------------------------------------------- evaluate

def _report_lines_tsv(report, rows):
    lines = ["metric\tvalue"]
    lines.append("true_positives\t%d" % report.true_positives)
    lines.append("false_positives\t%d" % report.false_positives)
    lines.append("false_negatives\t%d" % report.false_negatives)
    lines.append("precision\t%s" % fmt_pct(report.precision))
    lines.append("recall\t%s" % fmt_pct(report.recall))
    lines.append("f1\t%s" % fmt_pct(report.f1))
    if rows:
        lines.append("# per-type\tgold\tprecision\trecall\tf1")
        for entry_id, gold_count, rep in rows:
            lines.append("%s\t%d\t%s\t%s\t%s" % (
                entry_id, gold_count, fmt_pct(rep.precision),
                fmt_pct(rep.recall), fmt_pct(rep.f1)))
    return lines


def _cmd_evaluate(args):
    extractions = load_extractions(args.extractions)
    gold = load_gold(args.gold)
    report = evaluation.score(extractions, gold)
    rows = []
    if args.per_type:
        rows = evaluation.per_type_report(extractions, gold, args.per_type)
        report.per_type = {entry_id: rep for entry_id, _, rep in rows}
    if args.format == "json":
        _write_lines(args.out, [json.dumps(report.as_dict(), indent=2, sort_keys=True)])
    elif args.format == "pretty":
        summary = [["TP", report.true_positives], ["FP", report.false_positives],
                   ["FN", report.false_negatives],
                   ["precision", fmt_pct(report.precision)],
                   ["recall", fmt_pct(report.recall)], ["f1", fmt_pct(report.f1)]]
        lines = _pretty_table(["metric", "value"], summary)
        if rows:
            lines.append("")
            lines.extend(_pretty_table(
                ["type", "gold", "precision", "recall", "f1"],
                [[t, g, fmt_pct(r.precision), fmt_pct(r.recall), fmt_pct(r.f1)]
                 for t, g, r in rows]))
        _write_lines(args.out, lines)
    else:
        _write_lines(args.out, _report_lines_tsv(report, rows))


# ------------------------------------------------------------------ kappa

def _cmd_kappa(args):
    rows = []
    with open(args.labels, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            rows.append(line.split("\t"))
    kappa = evaluation.fleiss_kappa(rows)
    _write_lines(args.out, ["fleiss_kappa\t%.6f" % kappa])


# ------------------------------------------------------------------ index

def _cmd_index(args):
    if args.action == "build":
        if not args.sentences:
            raise _UsageError("index build requires --sentences")
        ExampleIndex.build(args.sentences, args.out)
        print("built index in %s" % args.out, file=sys.stderr)
    else:  # select
        if not (args.lexicon and args.index):
            raise _UsageError("index select requires --lexicon and --index")
        lexicon = load_lexicon(args.lexicon, _source_name(args.lexicon))
        index = ExampleIndex.open(args.index)
        lines = ["# entry_id\tsent_id\tsentence"]
        for entry in lexicon:
            selected = parse_match.select_example(entry, index)
            if selected is None:
                continue
            sent_id, _ = selected
            text = " ".join(index.sentence_tokens(sent_id))
            lines.append("%s\t%d\t%s" % (entry.id, sent_id, text))
        _write_lines(args.out, lines)


# ------------------------------------------------------------------- main

def build_parser():
    parser = _Parser(prog="piextract", description=__doc__)
    parser.add_argument("--config", help="key=value defaults file; flags win")
    sub = parser.add_subparsers(dest="command", metavar="command")
    subparsers = {}

    p = subparsers["lexicon"] = sub.add_parser("lexicon", help="load/expand/intersect lexicons")
    p.add_argument("--in", dest="infile", action="append", required=True)
    p.add_argument("--source", help="source label for a single plain input")
    p.add_argument("--intersect", action="store_true")
    p.add_argument("--expand-placeholders", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_lexicon)

    p = subparsers["overlap"] = sub.add_parser("overlap", help="pairwise resource overlap")
    p.add_argument("--in", dest="infile", action="append", required=True)
    p.add_argument("--decisions")
    p.add_argument("--candidates-out", dest="candidates_out")
    p.add_argument("--format", choices=("tsv", "json", "pretty"), default="tsv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_overlap)

    p = subparsers["candidates"] = sub.add_parser("candidates", help="annotation candidates")
    p.add_argument("--corpus", required=True)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_candidates)

    p = subparsers["extract"] = sub.add_parser("extract", help="extract PIE instances")
    p.add_argument("--method", choices=("exact", "fuzzy", "inflect", "parse"), required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--intervening", type=int, default=0, choices=(0, 1, 2, 3))
    p.add_argument("--case-sensitive", dest="case_sensitive", action="store_true")
    p.add_argument("--no-labels", dest="no_labels", action="store_true")
    p.add_argument("--no-direction", dest="no_direction", action="store_true")
    p.add_argument("--match-articles", dest="match_articles", action="store_true")
    p.add_argument("--pie-parses", dest="pie_parses")
    p.add_argument("--in-context", dest="in_context", metavar="INDEX_DIR")
    p.add_argument("--jobs", type=int, default=0, help="0 = machine core count")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_extract)

    p = subparsers["combine"] = sub.add_parser("combine", help="union extraction sets")
    p.add_argument("--in", dest="infile", action="append", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_combine)

    p = subparsers["evaluate"] = sub.add_parser("evaluate", help="score against gold")
    p.add_argument("--extractions", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--per-type", dest="per_type", type=int, default=0)
    p.add_argument("--format", choices=("tsv", "json", "pretty"), default="tsv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_evaluate)

    p = subparsers["kappa"] = sub.add_parser("kappa", help="Fleiss' kappa of a label matrix")
    p.add_argument("--labels", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_kappa)

    p = subparsers["index"] = sub.add_parser("index", help="example-corpus index")
    p.add_argument("action", choices=("build", "select"))
    p.add_argument("--sentences")
    p.add_argument("--lexicon")
    p.add_argument("--index")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_index)

    return parser, subparsers


def _load_config(path):
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise _UsageError("config %s:%d: expected key=value" % (path, lineno))
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def _apply_config(subparser, values):
    coerced = {}
    for action in subparser._actions:
        if action.dest in values:
            raw = values.pop(action.dest)
            if isinstance(action.const, bool) or isinstance(action.default, bool):
                coerced[action.dest] = raw.lower() in ("1", "true", "yes", "on")
            elif action.type is int:
                coerced[action.dest] = int(raw)
            else:
                coerced[action.dest] = raw
    if values:
        raise _UsageError("config has unknown keys: %s" % ", ".join(sorted(values)))
    subparser.set_defaults(**coerced)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, subparsers = build_parser()
    try:
        config_path = None
        if "--config" in argv:
            i = argv.index("--config")
            if i + 1 >= len(argv):
                raise _UsageError("--config needs a path")
            config_path = argv[i + 1]
            del argv[i : i + 2]
        command = next((a for a in argv if not a.startswith("-")), None)
        if config_path and command in subparsers:
            _apply_config(subparsers[command], _load_config(config_path))
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            parser.print_usage(sys.stderr)
            return 1
        args.func(args)
        return 0
    except (InputError, ParseSourceUnavailable, FileNotFoundError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 1
    except Exception as err:  # internal error
        print("internal error: %s: %s" % (type(err).__name__, err), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
