#!/usr/bin/env python3
# Copyright 2026 The Parascore Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates toy_corpus.txt, the training text of the builtin bigram scorer.

Each synonym-lattice alternative occurs only between the same two neighbours,
a fixed number of times. Its incoming and outgoing bigram counts are then
equal, so a locally preferred token is also preferred by the rest of the path.
Counts shrink from the first slot of a lattice to the last.

    python3 data/make_toy_corpus.py > data/toy_corpus.txt
"""

import random
import sys

random.seed(7)

SUBJECTS = ["Die Polizei", "Die Gemeinde", "Der Kanton", "Die Feuerwehr",
            "Das Team", "Die Behörde", "Der Verein", "Die Regierung"]

# word -> (count, carrier); the carrier fixes the neighbours of the word.
CONTROLLED = {
    "auch": (8, lambda w: f"Es wurde {w} im {random.choice(['Haus', 'Wald', 'Keller', 'Archiv'])} gefunden."),
    "ebenfalls": (2, lambda w: f"Es wurde {w} im {random.choice(['Haus', 'Wald', 'Keller', 'Archiv'])} gefunden."),
    "benachbarten": (5, lambda w: f"{random.choice(SUBJECTS)} fahndete im {w} Ausland nach Hinweisen."),
    "nahen": (2, lambda w: f"{random.choice(SUBJECTS)} fahndete im {w} Ausland nach Hinweisen."),
    "gesucht.": (4, lambda w: f"{random.choice(['Der Täter', 'Die Spur', 'Das Fahrzeug'])} wurde im Ausland {w}"),
    "verfolgt.": (2, lambda w: f"{random.choice(['Der Täter', 'Die Spur', 'Das Fahrzeug'])} wurde im Ausland {w}"),
    "geschah": (12, lambda w: f"Der Spatenstich {w} im {random.choice(['Mai', 'Juni', 'Herbst', 'Winter'])}."),
    "erfolgte": (3, lambda w: f"Der Spatenstich {w} im {random.choice(['Mai', 'Juni', 'Herbst', 'Winter'])}."),
    "war": (1, lambda w: f"Der Spatenstich {w} im {random.choice(['Mai', 'Juni', 'Herbst', 'Winter'])}."),
    "vergangenen": (3, lambda w: f"{random.choice(['Die Wahl', 'Die Messe', 'Das Fest'])} fand im Oktober {w} Jahres statt."),
    "letzten": (2, lambda w: f"{random.choice(['Die Wahl', 'Die Messe', 'Das Fest'])} fand im Oktober {w} Jahres statt."),
    "Überlegungen": (9, lambda w: f"{w} zur {random.choice(['Zukunft', 'Finanzierung', 'Planung'])} liegen vor."),
    "Erwägungen": (2, lambda w: f"{w} zur {random.choice(['Zukunft', 'Finanzierung', 'Planung'])} liegen vor."),
    "Lage": (5, lambda w: f"Massnahmen zur Verbesserung der {w} sind {random.choice(['umgesetzt.', 'beschlossen.'])}"),
    "Situation": (2, lambda w: f"Massnahmen zur Verbesserung der {w} sind {random.choice(['umgesetzt.', 'beschlossen.'])}"),
    "geplant.": (3, lambda w: f"Neue {random.choice(['Pläne', 'Wege', 'Regeln'])} sind {w}"),
    "vorgesehen.": (2, lambda w: f"Neue {random.choice(['Pläne', 'Wege', 'Regeln'])} sind {w}"),
}


def key(word):
    return word.strip(".").lower()


def main():
    out = []
    for word, (count, carrier) in CONTROLLED.items():
        out += [carrier(word) for _ in range(count)]

    filler = []
    verbs = ["plante", "prüfte", "meldete", "begann", "beendete", "suchte"]
    objects = ["den Neubau", "die Sanierung", "das Projekt", "die Strasse",
               "den Umbau", "die Schule"]
    times = ["im Oktober", "letztes Jahr", "im Frühling", "im Sommer",
             "im Mai", "im Herbst", "Ende Oktober"]
    places = ["in der Region", "in der Stadt", "im Kanton", "auf dem Land",
              "im Ausland", "im Wald"]
    topics = ["die Versorgung", "den Verkehr", "die Sicherheit", "die Bildung"]
    for _ in range(90):
        filler.append(f"{random.choice(SUBJECTS)} {random.choice(verbs)} "
                      f"{random.choice(objects)} {random.choice(times)}.")
    for _ in range(30):
        filler.append(f"{random.choice(SUBJECTS)} suchte "
                      f"{random.choice(places)} nach Hinweisen.")
    for _ in range(25):
        filler.append(f"{random.choice(['Pläne', 'Ideen', 'Projekte'])} "
                      f"{random.choice(topics)} zu verbessern "
                      f"{random.choice(['werden geprüft.', 'liegen vor.', 'sind in Planung.'])}")

    controlled = {key(w) for w in CONTROLLED}
    for line in filler:
        clash = controlled & {key(w) for w in line.split()}
        if clash:
            sys.exit(f"filler sentence uses lattice words {clash}: {line}")
    out += filler
    random.shuffle(out)
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
