"""pie-adapter: batch-produce the files the extraction toolkit consumes.

    pie-adapter --mode corpus     --in sentences.txt --out corpus.conllu
    pie-adapter --mode pies       --in lexicon.tsv   --out pies.conllu
    pie-adapter --mode in-context --in selected.tsv  --out parses.conllu
    pie-adapter --mode tag        --in lexicon.tsv   --out tagged.tsv

Backends: rules (default, deterministic, no dependencies) or spacy.
"""

import argparse
import sys

from . import jobs
from .backends import get_backend


def main(argv=None):
    parser = argparse.ArgumentParser(prog="pie-adapter", description=__doc__)
    parser.add_argument("--mode", required=True,
                        choices=("corpus", "pies", "in-context", "tag"))
    parser.add_argument("--in", dest="in_path", required=True)
    parser.add_argument("--out", required=True)
    parser.add_argument("--backend", default="rules")
    parser.add_argument("--doc-id", dest="doc_id", help="document id for corpus mode")
    parser.add_argument("--corrections", help="manual tag overrides (tag mode)")
    args = parser.parse_args(argv)

    try:
        backend = get_backend(args.backend)
        if args.mode == "corpus":
            n = jobs.parse_corpus(backend, args.in_path, args.out, args.doc_id)
        elif args.mode == "pies":
            n = jobs.parse_pies(backend, args.in_path, args.out)
        elif args.mode == "in-context":
            n = jobs.parse_examples(backend, args.in_path, args.out)
        else:
            corrections = jobs.load_corrections(args.corrections) \
                if args.corrections else None
            n = jobs.tag_lexicon(backend, args.in_path, args.out, corrections)
    except (OSError, RuntimeError) as err:
        print("pie-adapter: %s" % err, file=sys.stderr)
        return 1
    print("pie-adapter: wrote %d records to %s" % (n, args.out), file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
