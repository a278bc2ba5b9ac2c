#!/usr/bin/env python3
"""Regenerates the bundled mini dataset under data/.

The mini corpus is small enough to read by eye but rich enough to run the
whole pipeline: 30 documents, a handful of shared entities, twelve documents
carrying an entity unique to them (new-entity split candidates), and a few
repeated surfaces for mention augmentation.

Offsets in corpus.jsonl are byte offsets; the text is ASCII so they can be
computed with str.find.
"""

import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "data")


def kg_record(eid, label, aliases, claims):
    return {"id": eid, "label": label, "aliases": aliases, "claims": claims}


TYPES = [
    kg_record("Q5", "human", [], [["P279", "Q901"]]),
    kg_record("Q200", "chemist", [], [["P279", "Q210"]]),
    kg_record("Q201", "physicist", [], [["P279", "Q210"]]),
    kg_record("Q202", "politician", [], [["P279", "Q901"]]),
    kg_record("Q203", "jurist", [], [["P279", "Q901"]]),
    kg_record("Q204", "political writer", [], [["P279", "Q901"]]),
    kg_record("Q205", "community organizer", [], [["P279", "Q901"]]),
    kg_record("Q206", "podcaster", [], [["P279", "Q901"]]),
    kg_record("Q210", "scientist", [], [["P279", "Q901"]]),
    kg_record("Q220", "planet", [], [["P279", "Q221"]]),
    kg_record("Q221", "astronomical object", [], [["P279", "Q902"]]),
    kg_record("Q222", "star", [], [["P279", "Q221"]]),
    kg_record("Q230", "chemical compound", [], [["P279", "Q231"]]),
    kg_record("Q231", "chemical substance", [], [["P279", "Q902"]]),
    kg_record("Q232", "chemical element", [], [["P279", "Q231"]]),
    kg_record("Q233", "superseded scientific theory", [], [["P279", "Q234"]]),
    kg_record("Q234", "scientific theory", [], [["P279", "Q902"]]),
    kg_record("Q240", "city", [], [["P279", "Q902"]]),
    kg_record("Q241", "country", [], [["P279", "Q902"]]),
    kg_record("Q242", "company", [], [["P279", "Q902"]]),
    kg_record("Q243", "rock", [], [["P279", "Q902"]]),
    kg_record("Q244", "reptile", [], [["P279", "Q902"]]),
]

# (id, label, aliases, claims)
ENTITIES = [
    ("Q100", "Joseph Priestley", ["Priestley"], [["P31", "Q5"], ["P106", "Q200"]]),
    ("Q101", "Antoine Lavoisier", ["Lavoisier"], [["P31", "Q5"], ["P106", "Q200"]]),
    ("Q102", "Marie Curie", ["Curie"], [["P31", "Q5"], ["P106", "Q200"], ["P106", "Q201"]]),
    ("Q103", "Albert Einstein", ["Einstein"], [["P31", "Q5"], ["P106", "Q201"]]),
    ("Q104", "Barack Obama", ["Obama"],
     [["P31", "Q5"], ["P106", "Q202"], ["P106", "Q203"], ["P106", "Q204"],
      ["P106", "Q205"], ["P106", "Q206"]]),
    ("Q105", "Alice Palmer", ["Palmer"], [["P31", "Q5"], ["P106", "Q202"]]),
    ("Q106", "Angela Merkel", ["Merkel"], [["P31", "Q5"], ["P106", "Q202"], ["P106", "Q201"]]),
    ("Q110", "Venus", ["Morning Star"], [["P31", "Q220"]]),
    ("Q111", "Mars", ["Red Planet"], [["P31", "Q220"]]),
    ("Q112", "Jupiter", [], [["P31", "Q220"]]),
    ("Q113", "Sirius", ["Dog Star"], [["P31", "Q222"]]),
    ("Q120", "mercuric oxide", [], [["P31", "Q230"]]),
    ("Q121", "mercury", ["quicksilver"], [["P31", "Q232"]]),
    ("Q122", "dephlogisticated air", [], [["P31", "Q233"]]),
    ("Q123", "oxygen", [], [["P31", "Q232"]]),
    ("Q124", "hydrogen", [], [["P31", "Q232"]]),
    ("Q125", "water", [], [["P31", "Q230"]]),
    ("Q130", "Chicago", [], [["P31", "Q240"]]),
    ("Q131", "Paris", [], [["P31", "Q240"]]),
    ("Q132", "Berlin", [], [["P31", "Q240"]]),
    ("Q133", "France", [], [["P31", "Q241"]]),
    ("Q134", "Germany", [], [["P31", "Q241"]]),
    ("Q140", "General Electric", ["GE"], [["P31", "Q242"]]),
    ("Q141", "Siemens", [], [["P31", "Q242"]]),
    # Rare entities: each appears in exactly one document.
    ("Q150", "anorthosite", [], [["P31", "Q243"]]),
    ("Q151", "speckled tortoise", [], [["P31", "Q244"]]),
    ("Q152", "Rosalind Franklin", ["Franklin"], [["P31", "Q5"], ["P106", "Q200"]]),
    ("Q153", "Lise Meitner", ["Meitner"], [["P31", "Q5"], ["P106", "Q201"]]),
    ("Q154", "Timbuktu", [], [["P31", "Q240"]]),
    ("Q155", "Kyoto", [], [["P31", "Q240"]]),
    ("Q156", "peridotite", [], [["P31", "Q243"]]),
    ("Q157", "basalt", [], [["P31", "Q243"]]),
    ("Q158", "Nikola Tesla", ["Tesla"], [["P31", "Q5"], ["P106", "Q201"]]),
    ("Q159", "Ada Lovelace", ["Lovelace"], [["P31", "Q5"], ["P106", "Q201"]]),
    ("Q160", "Rotterdam", [], [["P31", "Q240"]]),
    ("Q161", "heavy water", [], [["P31", "Q230"]]),
    # A record the pipeline must discard: a human with no occupation.
    ("Q198", "John Doe", [], [["P31", "Q5"]]),
]


def doc(doc_id, text, links):
    """links: list of (surface, target, occurrence). Byte offsets via find."""
    out = []
    taken = []
    for surface, target, occurrence in links:
        pos = -1
        for _ in range(occurrence + 1):
            pos = text.find(surface, pos + 1)
            assert pos >= 0, (doc_id, surface)
        span = (pos, pos + len(surface))
        assert all(span[1] <= s or e <= span[0] for s, e in taken), (doc_id, surface)
        taken.append(span)
        out.append([span[0], span[1], target])
    out.sort(key=lambda l: l[0])
    return {"doc_id": doc_id, "text": text, "links": out}


DOCS = [
    doc("mini-0001",
        "These included carbon dioxide by burning diamond, and mercuric oxide by heating "
        "mercury. This type of experiment contributed to the discovery of "
        "\"dephlogisticated air\" by Priestley, which became better known as oxygen, "
        "following Lavoisier's investigations.",
        [("mercuric oxide", "mercuric oxide", 0), ("mercury", "mercury", 0),
         ("dephlogisticated air", "dephlogisticated air", 0),
         ("Priestley", "Joseph Priestley", 0), ("Lavoisier", "Antoine Lavoisier", 0),
         ("oxygen", "oxygen", 0)]),
    doc("mini-0002",
        "Obama was elected to the Illinois Senate in 1996, succeeding Democratic State "
        "Senator Alice Palmer from Illinois's 13th District.",
        [("Obama", "Barack Obama", 0), ("Alice Palmer", "Alice Palmer", 0)]),
    doc("mini-0003",
        "Marie Curie studied in Paris, where Curie carried out her research on radioactive "
        "elements such as hydrogen compounds.",
        [("Marie Curie", "Marie Curie", 0), ("Paris", "Paris", 0),
         ("hydrogen", "hydrogen", 0)]),
    doc("mini-0004",
        "Venus outshines Mars on most evenings, although Jupiter is larger than either "
        "planet seen from Earth.",
        [("Venus", "Venus", 0), ("Mars", "Mars", 0), ("Jupiter", "Jupiter", 0)]),
    doc("mini-0005",
        "Einstein left Berlin in 1932 and never returned to Germany.",
        [("Einstein", "Albert Einstein", 0), ("Berlin", "Berlin", 0),
         ("Germany", "Germany", 0)]),
    doc("mini-0006",
        "Water is formed from hydrogen and oxygen; water covers most of the planet.",
        [("water", "water", 0), ("hydrogen", "hydrogen", 0), ("oxygen", "oxygen", 0)]),
    doc("mini-0007",
        "Angela Merkel trained as a physicist before entering politics in Berlin. Merkel "
        "led Germany for sixteen years.",
        [("Angela Merkel", "Angela Merkel", 0), ("Berlin", "Berlin", 0),
         ("Germany", "Germany", 0)]),
    doc("mini-0008",
        "Sirius, the brightest star visible from Chicago, is easy to find on winter nights.",
        [("Sirius", "Sirius", 0), ("Chicago", "Chicago", 0)]),
    doc("mini-0009",
        "General Electric competed with Siemens for the contract, and GE eventually won.",
        [("General Electric", "General Electric", 0), ("Siemens", "Siemens", 0)]),
    doc("mini-0010",
        "Priestley isolated several gases; Lavoisier later named oxygen.",
        [("Priestley", "Joseph Priestley", 0), ("Lavoisier", "Antoine Lavoisier", 0),
         ("oxygen", "oxygen", 0)]),
    doc("mini-0011",
        "Paris and Berlin are connected by a direct train that crosses into Germany.",
        [("Paris", "Paris", 0), ("Berlin", "Berlin", 0), ("Germany", "Germany", 0)]),
    doc("mini-0012",
        "Mercury shines faintly beside Venus; mercury the metal is named after the planet.",
        [("mercury", "mercury", 0), ("Venus", "Venus", 0)]),
    doc("mini-0013",
        "Obama visited Chicago with Merkel during the summit.",
        [("Obama", "Barack Obama", 0), ("Chicago", "Chicago", 0),
         ("Merkel", "Angela Merkel", 0)]),
    doc("mini-0014",
        "Einstein admired Curie, and Curie corresponded with Einstein for decades.",
        [("Einstein", "Albert Einstein", 0), ("Curie", "Marie Curie", 0)]),
    doc("mini-0015",
        "France borders Germany, and both countries invest in chemistry research on water.",
        [("France", "France", 0), ("Germany", "Germany", 0), ("water", "water", 0)]),
    doc("mini-0016",
        "Hydrogen fuels the stars; Sirius burns hydrogen like our own sun.",
        [("Sirius", "Sirius", 0), ("hydrogen", "hydrogen", 0)]),
    doc("mini-0017",
        "Jupiter and Mars were both visible over Paris last night.",
        [("Jupiter", "Jupiter", 0), ("Mars", "Mars", 0), ("Paris", "Paris", 0)]),
    doc("mini-0018",
        "Siemens opened a laboratory in Berlin to study chemical compounds such as water.",
        [("Siemens", "Siemens", 0), ("Berlin", "Berlin", 0), ("water", "water", 0)]),
    # Documents with one rare entity each (new-entity candidates).
    doc("mini-0019",
        "Samples returned from the highlands resemble anorthosite found near "
        "Chicago quarries, geologists say.",
        [("anorthosite", "anorthosite", 0), ("Chicago", "Chicago", 0)]),
    doc("mini-0020",
        "The speckled tortoise remains the smallest of its kind; one was exhibited in Paris.",
        [("speckled tortoise", "speckled tortoise", 0), ("Paris", "Paris", 0)]),
    doc("mini-0021",
        "Rosalind Franklin produced the diffraction images, and Franklin shared drafts "
        "with colleagues including Curie's students.",
        [("Rosalind Franklin", "Rosalind Franklin", 0), ("Curie", "Marie Curie", 0)]),
    doc("mini-0022",
        "Lise Meitner explained fission while exiled from Berlin.",
        [("Lise Meitner", "Lise Meitner", 0), ("Berlin", "Berlin", 0)]),
    doc("mini-0023",
        "Timbuktu was a center of learning long before Paris universities flourished.",
        [("Timbuktu", "Timbuktu", 0), ("Paris", "Paris", 0)]),
    doc("mini-0024",
        "Kyoto hosts temples older than most buildings in Chicago.",
        [("Kyoto", "Kyoto", 0), ("Chicago", "Chicago", 0)]),
    doc("mini-0025",
        "Much peridotite rises from the mantle; peridotite weathers into soils rich in "
        "magnesium, unlike water-laid sediments.",
        [("peridotite", "peridotite", 0), ("water", "water", 0)]),
    doc("mini-0026",
        "Columns of basalt line the coast near Rotterdam.",
        [("basalt", "basalt", 0), ("Rotterdam", "Rotterdam", 0)]),
    doc("mini-0027",
        "Nikola Tesla demonstrated wireless lighting; Tesla later moved his laboratory and "
        "corresponded with Einstein.",
        [("Nikola Tesla", "Nikola Tesla", 0), ("Einstein", "Albert Einstein", 0)]),
    doc("mini-0028",
        "Ada Lovelace annotated the engine's description, and Lovelace foresaw its uses.",
        [("Ada Lovelace", "Ada Lovelace", 0)]),
    doc("mini-0029",
        "Reactors moderated with heavy water perform better than ordinary water designs.",
        [("heavy water", "heavy water", 0), ("water", "water", 1)]),
    doc("mini-0030",
        "Venus, Mars, and Jupiter aligned over Berlin while Merkel addressed the press.",
        [("Venus", "Venus", 0), ("Mars", "Mars", 0), ("Jupiter", "Jupiter", 0),
         ("Berlin", "Berlin", 0), ("Merkel", "Angela Merkel", 0)]),
]

CONFIG = """# mini pipeline configuration
seed = 42
human_type = Q5
train_size = 20
test_size = 4
newent_size = 4
mix_discovery = 0.20
mix_typing = 0.30
mix_recognition = 0.20
mix_slotfill = 0.30
relevance_filter = on
questions_per_doc = 3
"""

SCHEMA = [
    {"domain": "restaurant",
     "slots": ["food", "price range", "area", "name", "book time", "book day",
               "book people"]},
    {"domain": "hotel",
     "slots": ["price range", "type", "parking", "book stay", "book day", "book people",
               "area", "stars", "internet", "name"]},
    {"domain": "attraction", "slots": ["area", "name", "type"]},
    {"domain": "train",
     "slots": ["destination", "day", "departure", "arrive by", "book people", "leave at"]},
    {"domain": "taxi", "slots": ["leave at", "destination", "departure", "arrive by"]},
]

DIALOGS = [
    {"turn_id": "mwoz-001-1",
     "history": [["user", "I'm looking for a place to stay during my upcoming trip to "
                          "Cambridge."],
                 ["system", "I can definitely help you with that! What area are you staying "
                            "in, and what is the price range you are looking for?"],
                 ["user", "It should be located in the west and it should be cheap."]],
     "gold": "[hotel area]: west; [hotel price range]: cheap"},
    {"turn_id": "mwoz-001-2",
     "history": [["user", "It should be located in the west and it should be cheap."],
                 ["system", "There are two guesthouses in the west. Do you need parking?"],
                 ["user", "Yes, I need free parking please."]],
     "gold": "[hotel area]: west; [hotel parking]: yes; [hotel price range]: cheap"},
    {"turn_id": "mwoz-002-1",
     "history": [["user", "Can you find me a cheap restaurant in the centre?"]],
     "gold": "[restaurant area]: centre; [restaurant price range]: cheap"},
    {"turn_id": "mwoz-002-2",
     "history": [["user", "Can you find me a cheap restaurant in the centre?"],
                 ["system", "There are several. Any food preference?"],
                 ["user", "Italian, please."]],
     "gold": "[restaurant area]: centre; [restaurant food]: italian; "
             "[restaurant price range]: cheap"}
]

DST_PRED = [
    {"turn_id": "mwoz-001-1",
     "predicted": "[hotel area]: west; [hotel price range]: cheap"},
    {"turn_id": "mwoz-001-2",
     "predicted": "[hotel area]: west; [hotel parking]: none; [hotel price range]: cheap"},
    {"turn_id": "mwoz-002-1",
     "predicted": "[restaurant area]: centre; [restaurant price range]: cheap"},
    {"turn_id": "mwoz-002-2",
     "predicted": "[restaurant area]: centre; [restaurant food]: italian; "
                  "[restaurant price range]: cheap"},
]

TYPING_GOLD = [
    {"doc_id": "mini-0001", "start": 0, "end": 1, "surface": "mercuric oxide",
     "gold_types": ["chemical compound"], "entity_seen": True},
    {"doc_id": "mini-0001", "start": 2, "end": 3, "surface": "dephlogisticated air",
     "gold_types": ["superseded scientific theory"], "entity_seen": True},
    {"doc_id": "mini-0019", "start": 0, "end": 1, "surface": "anorthosite",
     "gold_types": ["rock"], "entity_seen": False},
    {"doc_id": "mini-0020", "start": 0, "end": 1, "surface": "speckled tortoise",
     "gold_types": ["reptile"], "entity_seen": False},
]

TYPING_PRED = [
    {"doc_id": "mini-0001", "start": 0, "end": 1, "predicted": "chemical compound"},
    {"doc_id": "mini-0001", "start": 2, "end": 3,
     "predicted": "superseded scientific theory"},
    {"doc_id": "mini-0019", "start": 0, "end": 1, "predicted": "metallurgical rock"},
    {"doc_id": "mini-0020", "start": 0, "end": 1, "predicted": "reptile and monotroph"},
]


def dump(path, records, header):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("# " + header + "\n")
        for rec in records:
            f.write(json.dumps(rec, ensure_ascii=False, separators=(",", ":")) + "\n")


def main():
    kg = TYPES + [kg_record(*e) for e in ENTITIES]
    dump(os.path.join(OUT, "mini", "kg.jsonl"), kg, "mini KG dump")
    dump(os.path.join(OUT, "mini", "corpus.jsonl"), DOCS, "mini hyperlinked corpus")
    dump(os.path.join(OUT, "mini", "dialogs.jsonl"), DIALOGS, "mini DST dialogs")
    dump(os.path.join(OUT, "mini", "dst_pred.jsonl"), DST_PRED, "mini DST predictions")
    dump(os.path.join(OUT, "mini", "typing_gold.jsonl"), TYPING_GOLD, "mini typing gold")
    dump(os.path.join(OUT, "mini", "typing_pred.jsonl"), TYPING_PRED,
         "mini typing predictions")
    dump(os.path.join(OUT, "dst", "schema.jsonl"), SCHEMA, "slot schemas")
    with open(os.path.join(OUT, "mini", "config.ini"), "w", newline="\n") as f:
        f.write(CONFIG)
    print("wrote mini dataset under", os.path.abspath(OUT))


if __name__ == "__main__":
    main()
