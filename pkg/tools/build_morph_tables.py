#!/usr/bin/env python3
"""Regenerate src/piextract/data/irregular_{verbs,nouns}.tsv.

Each row lists the complete non-base form set for one lemma; generation
treats a table hit as a full override of the suffix rules. Third-singular
and gerund default to the regular rules (doubling-class verbs derive the
gerund from their doubled past), with explicit overrides where stress
breaks the heuristics.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from piextract.morphology import _gerund, _third_singular  # noqa: E402

# lemma past pp [gerund] [third-singular]
VERBS = """
arise arose arisen
awake awoke awoken
be was been being is
bear bore borne
beat beat beaten
become became become
begin began begun beginning
bend bent bent
bet bet bet
bid bid bid
bind bound bound
bite bit bitten
bleed bled bled
blow blew blown
break broke broken
breed bred bred
bring brought brought
broadcast broadcast broadcast
build built built
burn burnt burned
burst burst burst
buy bought bought
cast cast cast
catch caught caught
choose chose chosen
cling clung clung
come came come
cost cost cost
creep crept crept
cut cut cut
deal dealt dealt
die died died dying
dig dug dug
do did done doing does
draw drew drawn
dream dreamt dreamed
drink drank drunk
drive drove driven
dwell dwelt dwelt
eat ate eaten
fall fell fallen
feed fed fed
feel felt felt
fight fought fought
find found found
flee fled fled
fling flung flung
fly flew flown
forbid forbade forbidden forbidding
forecast forecast forecast
foresee foresaw foreseen
forget forgot forgotten forgetting
forgive forgave forgiven
freeze froze frozen
get got gotten getting
give gave given
go went gone going goes
grind ground ground
grow grew grown
hang hung hung
have had had having has
hear heard heard
hide hid hidden
hit hit hit
hold held held
hurt hurt hurt
keep kept kept
kneel knelt knelt
know knew known
lay laid laid
lead led led
leap leapt leaped
learn learnt learned
leave left left
lend lent lent
let let let
lie lay lain lying
light lit lit
lose lost lost
make made made
mean meant meant
meet met met
mislead misled misled
mistake mistook mistaken
misunderstand misunderstood misunderstood
outdo outdid outdone
outgrow outgrew outgrown
overcome overcame overcome
overdo overdid overdone
overhear overheard overheard
oversee oversaw overseen
overtake overtook overtaken
overthrow overthrew overthrown
pay paid paid
prove proved proven
put put put
quit quit quit quitting
read read read
rebuild rebuilt rebuilt
repay repaid repaid
rethink rethought rethought
rewrite rewrote rewritten
rid rid rid
ride rode ridden
ring rang rung
rise rose risen
run ran run running
say said said
see saw seen
seek sought sought
sell sold sold
send sent sent
set set set
sew sewed sewn
shake shook shaken
shed shed shed
shine shone shone
shoot shot shot
show showed shown
shrink shrank shrunk
shut shut shut
sing sang sung
sink sank sunk
sit sat sat
slay slew slain
sleep slept slept
slide slid slid
sling slung slung
slit slit slit
smell smelt smelled
sow sowed sown
speak spoke spoken
speed sped sped
spell spelt spelled
spend spent spent
spin spun spun
spit spat spat
split split split
spoil spoilt spoiled
spread spread spread
spring sprang sprung
stand stood stood
steal stole stolen
stick stuck stuck
sting stung stung
stink stank stunk
stride strode stridden
strike struck struck
string strung strung
strive strove striven
swear swore sworn
sweep swept swept
swell swelled swollen
swim swam swum
swing swung swung
take took taken
teach taught taught
tear tore torn
tell told told
think thought thought
throw threw thrown
tie tied tied tying
thrust thrust thrust
tread trod trodden
undercut undercut undercut
undergo underwent undergone
understand understood understood
undertake undertook undertaken
vie vied vied vying
undo undid undone
untie untied untied untying
unwind unwound unwound
uphold upheld upheld
upset upset upset upsetting
wake woke woken
wear wore worn
weave wove woven
weep wept wept
wet wet wet
win won won
wind wound wound
withdraw withdrew withdrawn
withhold withheld withheld
withstand withstood withstood
wring wrung wrung
write wrote written
"""

# doubling-class verbs: regular +ed past but stressed final syllable
DOUBLING = """
acquit admit allot commit compel concur confer control defer deter
emit enrol equip excel expel fulfil incur infer instil kidnap occur
omit patrol permit prefer propel rebel recur refer regret repel
submit transfer transmit worship
""".split()

# -c verbs take -ck-
CK = ["panic", "picnic", "mimic", "traffic"]

EXTRA_VERBS = [
    ("up", "upped", "upped", "upping", "ups"),
]

NOUNS = """
addendum addenda
alga algae
alumnus alumni
analysis analyses
antenna antennae
appendix appendices
axis axes
bacterium bacteria
basis bases
bison bison
buffalo buffaloes
bureau bureaux
bus buses
cactus cacti
calf calves
cargo cargoes
child children
corps corps
corpus corpora
crisis crises
criterion criteria
curriculum curricula
datum data
deer deer
diagnosis diagnoses
die dice
domino dominoes
dwarf dwarves
echo echoes
elf elves
embargo embargoes
erratum errata
fez fezzes
fish fish
foot feet
formula formulae
fungus fungi
genus genera
goose geese
half halves
hero heroes
hoof hooves
hypothesis hypotheses
index indices
iris irises
knife knives
larva larvae
leaf leaves
life lives
loaf loaves
louse lice
man men
matrix matrices
means means
medium media
memorandum memoranda
millennium millennia
mosquito mosquitoes
mouse mice
nucleus nuclei
oasis oases
ovum ova
ox oxen
parenthesis parentheses
penny pence
person people
phenomenon phenomena
potato potatoes
quiz quizzes
radius radii
salmon salmon
scarf scarves
self selves
series series
sheep sheep
shelf shelves
species species
stimulus stimuli
stratum strata
swine swine
syllabus syllabi
symposium symposia
thesis theses
thief thieves
tomato tomatoes
tooth teeth
torpedo torpedoes
tornado tornadoes
trout trout
vertebra vertebrae
vertex vertices
veto vetoes
volcano volcanoes
wharf wharves
wife wives
wolf wolves
woman women
"""


def verb_rows():
    rows = {}
    for line in VERBS.strip().splitlines():
        parts = line.split()
        lemma, past, pp = parts[0], parts[1], parts[2]
        ger = parts[3] if len(parts) > 3 else _gerund(lemma)
        third = parts[4] if len(parts) > 4 else _third_singular(lemma)
        rows[lemma] = [third, past, pp, ger]
    for lemma in DOUBLING:
        past = lemma + lemma[-1] + "ed"
        rows[lemma] = [_third_singular(lemma), past, past, past[:-2] + "ing"]
    for lemma in CK:
        rows[lemma] = [lemma + "s", lemma + "ked", lemma + "ked", lemma + "king"]
    for lemma, past, pp, ger, third in EXTRA_VERBS:
        rows[lemma] = [third, past, pp, ger]
    return rows


def main():
    data_dir = Path(__file__).resolve().parents[1] / "src" / "piextract" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)

    with open(data_dir / "irregular_verbs.tsv", "w", encoding="utf-8") as fh:
        fh.write("# lemma\tpos\tforms (complete non-base set)\n")
        for lemma, forms in sorted(verb_rows().items()):
            uniq = [f for i, f in enumerate(forms) if f not in forms[:i] and f != lemma]
            assert len(uniq) + 1 <= 5, lemma
            fh.write("%s\tVERB\t%s\n" % (lemma, ",".join(uniq)))

    with open(data_dir / "irregular_nouns.tsv", "w", encoding="utf-8") as fh:
        fh.write("# lemma\tpos\tforms (complete non-base set)\n")
        for line in sorted(NOUNS.strip().splitlines()):
            lemma, plural = line.split()
            forms = [plural] if plural != lemma else []
            fh.write("%s\tNOUN\t%s\n" % (lemma, ",".join(forms)))


if __name__ == "__main__":
    main()
