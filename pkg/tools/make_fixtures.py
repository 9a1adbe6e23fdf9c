#!/usr/bin/env python3
"""Regenerate the hand-built test fixtures under tests/fixtures/.

Every tree below was written by hand (token: surface/lemma/upos/head/rel,
"~" lemma = lowercased surface). The five reference PIE parses (lose the plot, up the ante,
laughing stock, jump ship, rub shoulders) include the deliberately
wrong isolated parses for jump ship / rub shoulders / up the ante that
the in-context machinery is meant to correct.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

FIX = ROOT / "tests" / "fixtures"

LEXICON = [
    # id, surface, tagged form (one tag per token)
    ("spill_the_beans", "spill the beans", "VERB DET NOUN"),
    ("at_sea", "at sea", "ADP NOUN"),
    ("on_ice", "on ice", "ADP NOUN"),
    ("jump_ship", "jump ship", "VERB NOUN"),
    ("lose_the_plot", "lose the plot", "VERB DET NOUN"),
    ("up_the_ante", "up the ante", "VERB DET NOUN"),
    ("laughing_stock", "laughing stock", "ADJ NOUN"),
    ("rub_shoulders", "rub shoulders", "VERB NOUN"),
    ("nuts_and_bolts", "nuts and bolts", "NOUN CCONJ NOUN"),
    ("have_a_go", "have a go", "VERB DET NOUN"),
    ("in_the_running", "in the running", "ADP DET NOUN"),
    ("on_the_make", "on the make", "ADP DET NOUN"),
    ("a_thorn_in_someone_s_side", "a thorn in someone's side", "DET NOUN ADP PRON NOUN"),
    ("the_mother_of_all", "the mother of all —", "DET NOUN ADP DET X"),
    ("ring_a_bell", "ring a bell", "VERB DET NOUN"),
    ("cut_the_mustard", "cut the mustard", "VERB DET NOUN"),
    ("in_the_black", "in the black", "ADP DET NOUN"),
    ("kick_the_bucket", "kick the bucket", "VERB DET NOUN"),
    ("pull_rank", "pull rank", "VERB NOUN"),
    ("take_the_plunge", "take the plunge", "VERB DET NOUN"),
    ("in_a_nutshell", "in a nutshell", "ADP DET NOUN"),
    ("call_off_the_dogs", "call off the dogs", "VERB ADP DET NOUN"),
    ("easy_as_abc", "easy as ABC", "ADJ ADP PROPN"),
    ("coals_to_newcastle", "coals to Newcastle", "NOUN ADP PROPN"),
    ("out_of_the_woods", "out of the woods", "ADP ADP DET NOUN"),
    ("too_for_words", "too — for words", "ADV X ADP NOUN"),
    ("on_the_cards", "on the cards", "ADP DET NOUN"),
    ("see_the_light", "see the light", "VERB DET NOUN"),
]

# corpus sentences: (doc, sent_id, "surface/lemma/upos/head/rel ...")
CORPUS = [
    ("docA", "1", "Ephron/~/PROPN/2/nsubj ups/up/VERB/0/root the/~/DET/4/det "
     "ante/~/NOUN/2/dobj on/~/ADP/2/prep the/~/DET/8/det sucrose/~/ADJ/8/amod "
     "front/~/NOUN/5/pobj"),
    ("docA", "2", "you/~/PRON/4/nsubj might/~/AUX/4/aux just/~/ADV/4/advmod "
     "lose/~/VERB/0/root the/~/DET/6/det plot/~/NOUN/4/dobj completely/~/ADV/4/advmod"),
    ("docA", "3", "the/~/DET/2/det commission/~/NOUN/4/nsubj will/~/AUX/4/aux "
     "be/~/AUX/0/root a/~/DET/7/det laughing/laugh/VERB/7/compound stock/~/NOUN/4/attr"),
    ("docA", "4", "Did/do/AUX/3/aux they/~/PRON/3/nsubj jump/~/VERB/0/root "
     "ship/~/NOUN/3/dobj at/~/ADP/3/prep Lima/Lima/PROPN/5/pobj ?/?/PUNCT/3/punct"),
    ("docA", "5", "Each/~/DET/2/det day/~/NOUN/4/npadvmod they/~/PRON/4/nsubj "
     "rub/~/VERB/0/root shoulders/shoulder/NOUN/4/dobj with/~/ADP/4/prep "
     "death/~/NOUN/6/pobj ././PUNCT/4/punct"),
    ("docA", "6", "ships/ship/NOUN/3/nsubjpass were/be/AUX/3/auxpass "
     "jumped/jump/VERB/0/root at/~/ADP/3/prep dawn/~/NOUN/4/pobj"),
    ("docA", "7", "He/he/PRON/2/nsubj spilled/spill/VERB/0/root all/~/DET/5/det "
     "the/~/DET/5/det beans/bean/NOUN/2/dobj about/~/ADP/2/prep the/~/DET/8/det "
     "deal/~/NOUN/6/pobj"),
    ("docA", "8", "John/~/PROPN/2/nsubj kicked/kick/VERB/0/root the/~/DET/4/det "
     "bucket/~/NOUN/2/dobj last/~/ADJ/6/amod night/~/NOUN/2/npadvmod"),
    ("docA", "9", "the/~/DET/2/det beans/bean/NOUN/4/nsubjpass were/be/AUX/4/auxpass "
     "spilled/spill/VERB/0/root by/~/ADP/4/prep John/~/PROPN/5/pobj"),
    ("docA", "10", "they/~/PRON/2/nsubj were/be/AUX/0/root at/~/ADP/2/prep "
     "sea/~/NOUN/3/pobj for/~/ADP/2/prep nine/~/NUM/7/nummod days/day/NOUN/5/pobj"),
    ("docA", "11", "that/~/DET/2/det seawater/~/NOUN/3/nsubj was/be/AUX/0/root "
     "cold/~/ADJ/3/acomp"),
    ("docA", "12", "the/~/DET/3/det nuts-and-bolts/~/ADJ/3/amod approach/~/NOUN/4/nsubj "
     "works/work/VERB/0/root well/~/ADV/4/advmod"),
    ("docA", "13", "he/~/PRON/2/nsubj put/~/VERB/0/root the/~/DET/4/det "
     "question/~/NOUN/2/dobj on/~/ADP/2/prep ice/~/NOUN/5/pobj"),
    ("docA", "14", "her/~/PRON/2/poss success/~/NOUN/3/nsubj was/be/AUX/0/root "
     "a/~/DET/5/det thorn/~/NOUN/3/attr in/~/ADP/5/prep Google/~/PROPN/9/poss "
     "'s/'s/PART/7/case side/~/NOUN/6/pobj"),
    ("docA", "15", "it/~/PRON/2/nsubj was/be/AUX/0/root the/~/DET/4/det "
     "mother/~/NOUN/2/attr of/~/ADP/4/prep all/~/DET/7/det battles/battle/NOUN/5/pobj"),
    ("docA", "16", "her/~/PRON/2/poss name/~/NOUN/3/nsubj rings/ring/VERB/0/root "
     "a/~/DET/5/det bell/~/NOUN/3/dobj"),
    ("docA", "17", "he/~/PRON/4/nsubj could/~/AUX/4/aux not/~/ADV/4/neg "
     "cut/~/VERB/0/root the/~/DET/6/det mustard/~/NOUN/4/dobj"),
    ("docA", "18", "the/~/DET/2/det firm/~/NOUN/3/nsubj is/be/AUX/0/root "
     "back/~/ADV/3/advmod in/~/ADP/3/prep the/~/DET/7/det black/~/NOUN/5/pobj"),
    ("docB", "1", "a/~/DET/2/det change/~/NOUN/0/root in/~/ADP/2/prep "
     "the/~/DET/6/det everyday/~/ADJ/6/amod running/~/NOUN/3/pobj of/~/ADP/6/prep "
     "your/~/PRON/9/poss life/~/NOUN/7/pobj"),
    ("docB", "2", "he/~/PRON/2/nsubj hung/hang/VERB/0/root around/~/ADP/2/prt "
     "near/~/ADP/2/prep the/~/DET/6/det goal/~/NOUN/4/pobj or/~/CCONJ/4/cc "
     "in/~/ADP/4/conj the/~/DET/10/det box/~/NOUN/8/pobj for/~/ADP/2/prep "
     "that/~/DET/13/det matter/~/NOUN/11/pobj instead/~/ADV/2/advmod "
     "of/~/ADP/14/prep running/run/VERB/15/pcomp all/~/ADV/18/advmod "
     "over/~/ADP/16/prep the/~/DET/20/det show/~/NOUN/18/pobj"),
    ("docB", "3", "she/~/PRON/2/nsubj took/take/VERB/0/root the/~/DET/4/det "
     "plunge/~/NOUN/2/dobj at/~/ADP/2/prep last/~/NOUN/5/pobj"),
    ("docB", "4", "in/~/ADP/7/prep a/~/DET/3/det nutshell/~/NOUN/1/pobj "
     ",/,/PUNCT/7/punct the/~/DET/6/det plan/~/NOUN/7/nsubj failed/fail/VERB/0/root"),
    ("docB", "5", "they/~/PRON/2/nsubj called/call/VERB/0/root off/~/ADP/2/prt "
     "the/~/DET/5/det dogs/dog/NOUN/2/dobj yesterday/~/NOUN/2/npadvmod"),
    ("docB", "6", "the/~/DET/2/det exam/~/NOUN/3/nsubj was/be/AUX/0/root "
     "easy/~/ADJ/3/acomp as/~/ADP/4/prep ABC/ABC/PROPN/5/pobj"),
    ("docB", "7", "it/~/PRON/2/nsubj was/be/AUX/0/root like/~/ADP/2/prep "
     "carrying/carry/VERB/3/pcomp coals/coal/NOUN/4/dobj to/~/ADP/4/prep "
     "Newcastle/~/PROPN/6/pobj"),
    ("docB", "8", "we/~/PRON/2/nsubj are/be/AUX/0/root not/~/ADV/2/neg "
     "out/~/ADP/2/advmod of/~/ADP/4/prep the/~/DET/7/det woods/wood/NOUN/5/pobj "
     "yet/~/ADV/2/advmod"),
    ("docB", "9", "the/~/DET/2/det scene/~/NOUN/3/nsubj was/be/AUX/0/root "
     "too/~/ADV/5/advmod gruesome/~/ADJ/3/acomp for/~/ADP/5/prep words/word/NOUN/6/pobj"),
    ("docB", "10", "She/she/PRON/2/nsubj hoped/hope/VERB/0/root to/~/PART/4/aux "
     "see/~/VERB/2/xcomp the/~/DET/6/det light/~/NOUN/4/dobj of/~/ADP/6/prep "
     "dawn/~/NOUN/7/pobj"),
    ("docB", "11", "he/~/PRON/2/nsubj has/have/VERB/0/root a/~/DET/5/det "
     "real/~/ADJ/5/amod go/~/NOUN/2/dobj at/~/ADP/5/prep winning/win/VERB/6/pcomp"),
    ("docB", "12", "you/~/PRON/3/nsubj can/~/AUX/3/aux have/~/VERB/0/root "
     "a/~/DET/5/det smoke/~/NOUN/3/dobj and/~/CCONJ/3/cc go/~/VERB/3/conj"),
    ("docB", "13", "At/at/ADP/6/prep sea/~/NOUN/1/pobj ,/,/PUNCT/6/punct "
     "the/~/DET/5/det crew/~/NOUN/6/nsubj slept/sleep/VERB/0/root"),
    ("docB", "14", "the/~/DET/2/det project/~/NOUN/3/nsubj is/be/AUX/0/root "
     "on/~/ADP/3/prep ice/~/NOUN/4/pobj until/~/ADP/3/prep spring/~/NOUN/6/pobj"),
    ("docB", "15", "Mary/~/PROPN/2/nsubj pulled/pull/VERB/0/root rank/~/NOUN/2/dobj "
     "on/~/ADP/2/prep her/~/PRON/6/poss rivals/rival/NOUN/4/pobj"),
    ("docB", "16", "the/~/DET/2/det offer/~/NOUN/3/nsubj is/be/AUX/0/root "
     "still/~/ADV/3/advmod on/~/ADP/3/prep the/~/DET/7/det cards/card/NOUN/5/pobj"),
    ("docB", "17", "a/~/DET/3/det tough/~/ADJ/3/amod nut/~/NOUN/0/root "
     "to/~/PART/5/aux crack/~/VERB/3/acl for/~/ADP/5/prep anyone/~/PRON/6/pobj"),
    ("docB", "18", "he/~/PRON/2/nsubj was/be/AUX/0/root on/~/ADP/2/prep "
     "the/~/DET/5/det make/~/NOUN/3/pobj again/~/ADV/2/advmod"),
    ("docC", "1", "Taking/take/VERB/5/csubj coals/coal/NOUN/1/dobj to/~/ADP/1/prep "
     "Newcastle/~/PROPN/3/pobj amused/amuse/VERB/0/root him/~/PRON/5/dobj"),
    ("docC", "2", "The/the/DET/2/det thorn/~/NOUN/7/nsubj in/~/ADP/2/prep "
     "my/~/PRON/5/poss side/~/NOUN/3/pobj finally/~/ADV/7/advmod left/leave/VERB/0/root"),
    ("docC", "3", "“/“/PUNCT/2/punct spill/~/VERB/6/csubj the/~/DET/4/det "
     "beans/bean/NOUN/2/dobj ”/”/PUNCT/2/punct is/be/AUX/0/root "
     "a/~/DET/9/det well-known/~/ADJ/9/amod idiom/~/NOUN/6/attr"),
    ("docC", "4", "he/~/PRON/2/nsubj jumped/jump/VERB/0/root ship/~/NOUN/2/dobj "
     "before/~/ADP/2/prep the/~/DET/6/det launch/~/NOUN/4/pobj"),
    ("docC", "5", "the/~/DET/2/det ante/~/NOUN/4/nsubjpass was/be/AUX/4/auxpass "
     "upped/up/VERB/0/root once/~/ADV/6/advmod more/~/ADV/4/advmod"),
    ("docC", "6", "she/~/PRON/2/nsubj saw/see/VERB/0/root the/~/DET/4/det "
     "light/~/NOUN/2/dobj of/~/ADP/4/prep the/~/DET/7/det sun/~/NOUN/5/pobj "
     "through/~/ADP/2/prep the/~/DET/10/det trees/tree/NOUN/8/pobj"),
    ("docC", "7", "After/after/ADP/7/prep another/~/DET/3/det explanation/~/NOUN/1/pobj "
     ",/,/PUNCT/7/punct I/I/PRON/7/nsubj finally/~/ADV/7/advmod saw/see/VERB/0/root "
     "the/~/DET/9/det light/~/NOUN/7/dobj"),
    ("docC", "8", "nuts/nut/NOUN/5/nsubjpass and/~/CCONJ/1/cc bolts/bolt/NOUN/1/conj "
     "were/be/AUX/5/auxpass scattered/scatter/VERB/0/root on/~/ADP/5/prep "
     "the/~/DET/8/det floor/~/NOUN/6/pobj"),
    ("docC", "9", "they/~/PRON/2/nsubj kept/keep/VERB/0/root the/~/DET/4/det "
     "project/~/NOUN/2/dobj in/~/ADP/2/prep the/~/DET/7/det running/~/NOUN/5/pobj "
     "for/~/ADP/2/prep years/year/NOUN/8/pobj"),
    ("docC", "10", "His/his/PRON/2/poss rivals/rival/NOUN/3/nsubj rang/ring/VERB/0/root "
     "a/~/DET/5/det bell/~/NOUN/3/dobj at/~/ADP/3/prep midnight/~/NOUN/6/pobj"),
    ("docC", "11", "the/~/DET/2/det dogs/dog/NOUN/4/nsubjpass were/be/AUX/4/auxpass "
     "called/call/VERB/0/root off/~/ADP/4/prt"),
    ("docC", "12", "Everyone/~/PRON/2/nsubj was/be/AUX/0/root immensely/~/ADV/4/advmod "
     "proud/~/ADJ/2/acomp ,/,/PUNCT/2/punct in/~/ADP/2/prep a/~/DET/8/det "
     "nutshell/~/NOUN/6/pobj"),
    ("docC", "13", "The/the/DET/3/det black/~/ADJ/3/amod cat/~/NOUN/4/nsubj "
     "was/be/AUX/0/root in/~/ADP/4/prep the/~/DET/7/det running/~/NOUN/5/pobj"),
    ("docC", "14", "it/~/PRON/2/nsubj rained/rain/VERB/0/root for/~/ADP/2/prep "
     "days/day/NOUN/3/pobj on/~/ADP/2/prep end/~/NOUN/5/pobj"),
    ("docC", "15", "Did/do/AUX/3/aux he/~/PRON/3/nsubj have/~/VERB/0/root "
     "a/~/DET/5/det go/~/NOUN/3/dobj at/~/ADP/5/prep the/~/DET/8/det "
     "record/~/NOUN/6/pobj ?/?/PUNCT/3/punct"),
    ("docC", "16", "the/~/DET/3/det black/~/ADJ/3/amod market/~/NOUN/4/nsubj "
     "thrived/thrive/VERB/0/root in/~/ADP/4/prep the/~/DET/7/det winter/~/NOUN/5/pobj"),
    ("docC", "17", "She/she/PRON/2/nsubj upped/up/VERB/0/root the/~/DET/4/det "
     "ante/~/NOUN/2/dobj on/~/ADP/2/prep the/~/DET/8/det sucrose/~/ADJ/8/amod "
     "front/~/NOUN/5/pobj"),
    ("docC", "18", "Newcastle/~/PROPN/2/compound fans/fan/NOUN/3/nsubj "
     "carried/carry/VERB/0/root coals/coal/NOUN/3/dobj to/~/ADP/3/prep "
     "the/~/DET/7/det stadium/~/NOUN/5/pobj"),
]

# isolated PIE parses (entry_id, tokens, extra meta)
PIE_PARSES = [
    ("spill_the_beans", "spill/~/VERB/0/root the/~/DET/3/det beans/bean/NOUN/1/dobj", None),
    ("at_sea", "at/~/ADP/0/root sea/~/NOUN/1/pobj", None),
    ("on_ice", "on/~/ADP/0/root ice/~/NOUN/1/pobj", None),
    ("jump_ship", "jump/~/VERB/2/compound ship/~/NOUN/0/root", None),
    ("lose_the_plot", "lose/~/VERB/0/root the/~/DET/3/det plot/~/NOUN/1/dobj", None),
    ("up_the_ante", "up/~/ADP/0/root the/~/DET/3/det ante/~/NOUN/1/pobj", None),
    ("laughing_stock", "laughing/laugh/VERB/0/root stock/~/NOUN/1/dobj", None),
    ("rub_shoulders", "rub/~/VERB/0/root shoulders/shoulder/NOUN/1/compound", None),
    ("nuts_and_bolts", "nuts/nut/NOUN/0/root and/~/CCONJ/1/cc bolts/bolt/NOUN/1/conj", None),
    ("have_a_go", "have/~/VERB/0/root a/~/DET/3/det go/~/NOUN/1/dobj", None),
    ("in_the_running", "in/~/ADP/0/root the/~/DET/3/det running/~/NOUN/1/pobj", None),
    ("on_the_make", "on/~/ADP/0/root the/~/DET/3/det make/~/NOUN/1/pobj", None),
    ("a_thorn_in_someone_s_side",
     "a/~/DET/2/det thorn/~/NOUN/0/root in/~/ADP/2/prep someone/~/PRON/6/poss "
     "'s/'s/PART/4/case side/~/NOUN/3/pobj", None),
    ("the_mother_of_all",
     "the/~/DET/2/det mother/~/NOUN/0/root of/~/ADP/2/prep all/~/DET/5/det "
     "fine/~/ADJ/3/pobj", "pie_fillers = 5"),
    ("ring_a_bell", "ring/~/VERB/0/root a/~/DET/3/det bell/~/NOUN/1/dobj", None),
    ("cut_the_mustard", "cut/~/VERB/0/root the/~/DET/3/det mustard/~/NOUN/1/dobj", None),
    ("in_the_black", "in/~/ADP/0/root the/~/DET/3/det black/~/NOUN/1/pobj", None),
    ("kick_the_bucket", "kick/~/VERB/0/root the/~/DET/3/det bucket/~/NOUN/1/dobj", None),
    ("pull_rank", "pull/~/VERB/0/root rank/~/NOUN/1/dobj", None),
    ("take_the_plunge", "take/~/VERB/0/root the/~/DET/3/det plunge/~/NOUN/1/dobj", None),
    ("in_a_nutshell", "in/~/ADP/0/root a/~/DET/3/det nutshell/~/NOUN/1/pobj", None),
    ("call_off_the_dogs",
     "call/~/VERB/0/root off/~/ADP/1/prt the/~/DET/4/det dogs/dog/NOUN/1/dobj", None),
    ("easy_as_abc", "easy/~/ADJ/0/root as/~/ADP/1/prep ABC/ABC/PROPN/2/pobj", None),
    ("coals_to_newcastle",
     "coals/coal/NOUN/0/root to/~/ADP/1/prep Newcastle/~/PROPN/2/pobj", None),
    ("out_of_the_woods",
     "out/~/ADP/0/root of/~/ADP/1/prep the/~/DET/4/det woods/wood/NOUN/2/pobj", None),
    ("too_for_words",
     "too/~/ADV/2/advmod fine/~/ADJ/0/root for/~/ADP/2/prep words/word/NOUN/3/pobj",
     "pie_fillers = 2"),
    ("on_the_cards", "on/~/ADP/0/root the/~/DET/3/det cards/card/NOUN/1/pobj", None),
    ("see_the_light", "see/~/VERB/0/root the/~/DET/3/det light/~/NOUN/1/dobj", None),
]

EXAMPLE_SENTENCES = [
    "Did they jump ship at Lima?",
    '"jump ship" indeed.',
    "Each day they rub shoulders with death.",
    "They often rub shoulders with the great ones.",
    "The officers had to jump ship quickly before the storm hit the bay.",
]

# parses for the selectable example sentences
EXAMPLE_PARSES = [
    ("1", "Did/do/AUX/3/aux they/~/PRON/3/nsubj jump/~/VERB/0/root "
     "ship/~/NOUN/3/dobj at/~/ADP/3/prep Lima/Lima/PROPN/5/pobj ?/?/PUNCT/3/punct"),
    ("3", "Each/~/DET/2/det day/~/NOUN/4/npadvmod they/~/PRON/4/nsubj "
     "rub/~/VERB/0/root shoulders/shoulder/NOUN/4/dobj with/~/ADP/4/prep "
     "death/~/NOUN/6/pobj ././PUNCT/4/punct"),
]

GOLD = [
    # doc, sent, entry, pie y/n, sense (i/l/o) when y
    ("docA", "1", "up_the_ante", "y", "i"),
    ("docA", "2", "lose_the_plot", "y", "i"),
    ("docA", "3", "laughing_stock", "y", "i"),
    ("docA", "4", "jump_ship", "y", "i"),
    ("docA", "5", "rub_shoulders", "y", "i"),
    ("docA", "6", "jump_ship", "y", "i"),
    ("docA", "7", "spill_the_beans", "y", "i"),
    ("docA", "8", "kick_the_bucket", "y", "i"),
    ("docA", "9", "spill_the_beans", "y", "i"),
    ("docA", "10", "at_sea", "y", "l"),
    ("docA", "12", "nuts_and_bolts", "y", "i"),
    ("docA", "13", "on_ice", "y", "i"),
    ("docA", "14", "a_thorn_in_someone_s_side", "y", "i"),
    ("docA", "15", "the_mother_of_all", "y", "i"),
    ("docA", "16", "ring_a_bell", "y", "i"),
    ("docA", "17", "cut_the_mustard", "y", "i"),
    ("docA", "18", "in_the_black", "y", "i"),
    ("docB", "1", "in_the_running", "n", None),
    ("docB", "2", "in_the_running", "n", None),
    ("docB", "3", "take_the_plunge", "y", "i"),
    ("docB", "4", "in_a_nutshell", "y", "i"),
    ("docB", "5", "call_off_the_dogs", "y", "i"),
    ("docB", "6", "easy_as_abc", "y", "i"),
    ("docB", "7", "coals_to_newcastle", "y", "i"),
    ("docB", "8", "out_of_the_woods", "y", "i"),
    ("docB", "9", "too_for_words", "y", "i"),
    ("docB", "10", "see_the_light", "y", "l"),
    ("docB", "11", "have_a_go", "y", "i"),
    ("docB", "12", "have_a_go", "n", None),
    ("docB", "13", "at_sea", "y", "l"),
    ("docB", "14", "on_ice", "y", "i"),
    ("docB", "15", "pull_rank", "y", "i"),
    ("docB", "16", "on_the_cards", "y", "i"),
    ("docB", "18", "on_the_make", "y", "i"),
    ("docC", "1", "coals_to_newcastle", "y", "i"),
    ("docC", "2", "a_thorn_in_someone_s_side", "y", "i"),
    ("docC", "3", "spill_the_beans", "y", "o"),
    ("docC", "4", "jump_ship", "y", "i"),
    ("docC", "5", "up_the_ante", "y", "i"),
    ("docC", "6", "see_the_light", "y", "l"),
    ("docC", "7", "see_the_light", "y", "i"),
    ("docC", "8", "nuts_and_bolts", "y", "l"),
    ("docC", "9", "in_the_running", "y", "i"),
    ("docC", "10", "ring_a_bell", "y", "l"),
    ("docC", "11", "call_off_the_dogs", "y", "i"),
    ("docC", "12", "in_a_nutshell", "y", "i"),
    ("docC", "13", "in_the_running", "y", "i"),
    ("docC", "15", "have_a_go", "y", "i"),
    ("docC", "17", "up_the_ante", "y", "i"),
]


def parse_tokens(spec):
    rows = []
    for item in spec.split():
        surface, lemma, upos, head, rel = item.split("/")
        if lemma == "~":
            lemma = surface.lower()
        rows.append((surface, lemma, upos, int(head), rel))
    return rows


def conllu_block(fh, sent_id, rows, meta=()):
    fh.write("# sent_id = %s\n" % sent_id)
    for line in meta:
        fh.write("# %s\n" % line)
    fh.write("# text = %s\n" % " ".join(r[0] for r in rows))
    for i, (surface, lemma, upos, head, rel) in enumerate(rows, 1):
        fh.write("%d\t%s\t%s\t%s\t_\t_\t%d\t%s\t_\t_\n" % (i, surface, lemma, upos, head, rel))
    fh.write("\n")


def main():
    FIX.mkdir(parents=True, exist_ok=True)

    with open(FIX / "lexicon_small.tsv", "w", encoding="utf-8") as fh:
        fh.write("# id\tsurface\tsource\ttagged\n")
        for entry_id, surface, tags in LEXICON:
            tagged = " ".join(
                "%s/%s" % (tok, tag)
                for tok, tag in zip(surface.split(), tags.split())
            )
            fh.write("%s\t%s\tfixture\t%s\n" % (entry_id, surface, tagged))

    with open(FIX / "corpus_small.conllu", "w", encoding="utf-8") as fh:
        last_doc = None
        for doc, sent_id, spec in CORPUS:
            if doc != last_doc:
                fh.write("# newdoc id = %s\n" % doc)
                last_doc = doc
            conllu_block(fh, sent_id, parse_tokens(spec))

    with open(FIX / "pie_parses.conllu", "w", encoding="utf-8") as fh:
        for entry_id, spec, extra in PIE_PARSES:
            meta = ["entry_id = %s" % entry_id]
            if extra:
                meta.append(extra)
            conllu_block(fh, entry_id, parse_tokens(spec), meta)

    idx_dir = FIX / "examples_idx"
    idx_dir.mkdir(exist_ok=True)
    sentences_txt = FIX / "example_sentences.txt"
    with open(sentences_txt, "w", encoding="utf-8") as fh:
        for line in EXAMPLE_SENTENCES:
            fh.write(line + "\n")
    from piextract.example_index import ExampleIndex

    ExampleIndex.build(sentences_txt, idx_dir)
    with open(idx_dir / "parses.conllu", "w", encoding="utf-8") as fh:
        for sent_id, spec in EXAMPLE_PARSES:
            conllu_block(fh, sent_id, parse_tokens(spec))

    with open(FIX / "gold_small.tsv", "w", encoding="utf-8") as fh:
        fh.write("# doc\tsent\tentry_id\tpie\tsense\n")
        for doc, sent, entry_id, pie, sense in GOLD:
            fh.write("%s\t%s\t%s\t%s\t%s\n" % (doc, sent, entry_id, pie, sense or ""))

    # sanity: everything loads through the public loaders
    from piextract.conllu import load_conllu
    from piextract.lexicon import load_lexicon
    from piextract.evaluation import load_gold

    lex = load_lexicon(FIX / "lexicon_small.tsv", "fixture")
    assert len(lex) == len(LEXICON), len(lex)
    corpus = load_conllu(FIX / "corpus_small.conllu")
    assert len(corpus) == len(CORPUS)
    pies = load_conllu(FIX / "pie_parses.conllu")
    assert len(pies) == len(PIE_PARSES)
    load_conllu(idx_dir / "parses.conllu")
    load_gold(FIX / "gold_small.tsv")
    print("fixtures ok: %d entries, %d sentences, %d pie parses"
          % (len(lex), len(corpus), len(pies)))


if __name__ == "__main__":
    main()
