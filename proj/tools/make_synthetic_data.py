#!/usr/bin/env python3
"""Regenerate data/bank.jsonl and data/corpus.jsonl.

The bank is hand-written trivia across the seven difficulty levels. The corpus
holds supporting passages for every question, passages that mention the wrong
choices in unrelated contexts, misleading .pdf documents (which queries
exclude), and general filler text.

Usage: tools/make_synthetic_data.py [output_dir]
"""

import json
import random
import sys
from pathlib import Path

# (id, level, question, choices, answer index, supporting passages, other passages)
QUESTIONS = [
    ("q001", 1, "What is the capital of France?", ["Paris", "Berlin", "Rome", "Madrid"], 0,
     ["Paris is the capital of France and its largest city, home to the Louvre and the Eiffel Tower.",
      "The French government sits in Paris. As the capital of France it hosts the national assembly.",
      "Visitors to France usually start in Paris, the capital, before heading to the Loire valley."],
     ["Berlin is known for its museums and the remains of the wall that divided the city.",
      "Madrid has a famous art museum called the Prado and hot, dry summers."]),
    ("q002", 1, "Which animal is known as the king of the jungle?", ["Lion", "Zebra", "Giraffe", "Hippo"], 0,
     ["The lion is often called the king of the jungle, although lions mostly live on open grassland.",
      "Storybooks crown the lion king of the jungle because of its mane and its roar.",
      "Why is the lion known as the king of the jungle? Its strength and social prides earned the title."],
     ["A zebra has black and white stripes that are unique to each animal.",
      "The giraffe is the tallest land animal and feeds on acacia leaves."]),
    ("q003", 1, "What color is the sky on a clear day?", ["Green", "Blue", "Red", "Yellow"], 1,
     ["On a clear day the sky looks blue because air scatters blue light more than red light.",
      "Rayleigh scattering explains why a clear sky is blue during the day.",
      "Painters mix several shades of blue to capture the sky on a clear summer day."],
     ["Green is the color of chlorophyll, the pigment plants use for photosynthesis.",
      "Red and yellow leaves appear in autumn when chlorophyll breaks down."]),
    ("q004", 1, "Which of these is not a mammal?", ["Dolphin", "Whale", "Bat", "Salmon"], 3,
     ["The dolphin is a marine mammal that breathes air through a blowhole.",
      "A whale is a mammal; whales nurse their young with milk.",
      "The bat is the only mammal capable of true sustained flight.",
      "Dolphins and whales are both mammals, and so are bats."],
     ["Salmon are fish that hatch in rivers, migrate to the ocean and return upstream to spawn.",
      "Smoked salmon is a popular dish in Scotland and Norway."]),
    ("q005", 1, "How many legs does a spider have?", ["Six", "Eight", "Ten", "Four"], 1,
     ["Every spider has eight legs, which separates spiders from insects.",
      "Spiders are arachnids with eight legs and two body segments.",
      "Count the legs on a spider and you will find eight of them."],
     ["Insects have six legs and three body segments.",
      "A lobster has ten legs, including its two large claws."]),
    ("q006", 1, "Which planet is closest to the sun?", ["Venus", "Earth", "Mercury", "Mars"], 2,
     ["Mercury is the planet closest to the sun and completes an orbit in 88 days.",
      "The closest planet to the sun, Mercury, has almost no atmosphere.",
      "Being closest to the sun, Mercury swings between extreme heat and cold."],
     ["Venus is wrapped in thick clouds of sulfuric acid.",
      "Mars is called the red planet because of iron oxide dust."]),
    ("q007", 1, "What do bees make?", ["Milk", "Honey", "Silk", "Cotton"], 1,
     ["Bees make honey from the nectar of flowers and store it in wax combs.",
      "Honey bees make honey to feed the colony through the winter.",
      "Beekeepers collect the honey that bees make in their hives."],
     ["Silk is spun by silkworms, the larvae of a moth.",
      "Cotton grows in fluffy bolls around the seeds of the cotton plant.",
      "Cows and goats produce milk for their young."]),
    ("q008", 1, "According to the proverb, all roads lead to where?", ["Rome", "Paris", "London", "Athens"], 0,
     ["The proverb says all roads lead to Rome, recalling the vast Roman road network.",
      "All roads lead to Rome is an old saying meaning many methods reach the same result.",
      "Medieval writers already wrote that all roads lead to Rome."],
     ["London is crossed by the river Thames and many bridges.",
      "Athens is home to the Parthenon on the Acropolis.",
      "Many roads lead to London from the surrounding counties."]),
    ("q009", 1, "In which country are the pyramids of Giza?", ["Egypt", "Mexico", "Peru", "India"], 0,
     ["The pyramids of Giza stand on the edge of Cairo in Egypt.",
      "Egypt's most famous monuments are the pyramids of Giza and the Sphinx.",
      "Built for the pharaohs, the Giza pyramids are the pride of Egypt."],
     ["Mexico has stepped pyramids built by the Aztec and Maya.",
      "Machu Picchu is an Inca citadel high in the mountains of Peru."]),

    ("q010", 2, "Who is Flash Gordon's archenemy?",
     ["Ming the Merciless", "Lex Luthor", "The Joker", "Doctor Doom"], 0,
     ["Flash Gordon battles his archenemy Ming the Merciless, ruler of the planet Mongo.",
      "In the Flash Gordon comic strips, Ming the Merciless is the tyrant Flash must defeat.",
      "Ming the Merciless remains the archenemy in every Flash Gordon film and serial."],
     ["Lex Luthor is the archenemy of Superman.",
      "The Joker is Batman's most famous foe.",
      "Doctor Doom rules Latveria and opposes the Fantastic Four."]),
    ("q011", 2, "Which instrument has 88 keys?", ["Violin", "Piano", "Flute", "Trumpet"], 1,
     ["A standard piano has 88 keys, 52 white and 36 black.",
      "The piano is a keyboard instrument; the modern piano has 88 keys spanning more than seven octaves.",
      "The 88 keys of a piano strike hammers against strings."],
     ["A violin has four strings and is played with a bow.",
      "The trumpet has three valves and a bright tone.",
      "The flute is a woodwind instrument played across the mouthpiece."]),
    ("q012", 2, "What is the largest ocean on Earth?", ["Atlantic", "Indian", "Arctic", "Pacific"], 3,
     ["The Pacific is the largest ocean on Earth, covering about a third of the surface.",
      "Larger than all land combined, the Pacific Ocean is the largest and deepest ocean on Earth.",
      "The Mariana Trench lies in the Pacific, the largest ocean."],
     ["The Atlantic Ocean separates Europe and Africa from the Americas.",
      "The Arctic Ocean is mostly covered by sea ice.",
      "Monsoon winds blow across the Indian Ocean."]),
    ("q013", 2, "Which of these is not a primary color in painting?", ["Red", "Blue", "Yellow", "Green"], 3,
     ["In painting, red is a primary color, along with yellow and blue.",
      "Traditional painting treats blue as a primary color that cannot be mixed from other paints.",
      "Yellow is a primary color in painting; mixing it with red gives orange.",
      "Every primary color in painting, red, blue or yellow, comes straight from the tube."],
     ["Green is a secondary color made by mixing two paints.",
      "Green fields and forests cover much of Ireland."]),
    ("q014", 2, "Who wrote Romeo and Juliet?",
     ["Charles Dickens", "William Shakespeare", "Jane Austen", "Mark Twain"], 1,
     ["William Shakespeare wrote Romeo and Juliet early in his career.",
      "Romeo and Juliet, the tragedy of two young lovers, was written by William Shakespeare.",
      "Among the plays William Shakespeare wrote, Romeo and Juliet is one of the most performed."],
     ["Charles Dickens wrote Oliver Twist and Great Expectations.",
      "Jane Austen wrote Pride and Prejudice.",
      "Mark Twain wrote about Tom Sawyer and the Mississippi."]),
    ("q015", 2, "What gas do plants absorb from the air?", ["Oxygen", "Nitrogen", "Carbon dioxide", "Helium"], 2,
     ["Plants absorb carbon dioxide from the air and use it in photosynthesis.",
      "Leaves absorb carbon dioxide through tiny pores called stomata; plants take the gas from the air.",
      "Forests absorb carbon dioxide from the air, which is why plants matter for the climate.",
      "During photosynthesis plants absorb carbon dioxide and release oxygen."],
     ["Nitrogen makes up most of the air we breathe.",
      "Helium is lighter than air and fills party balloons.",
      "Divers carry tanks of compressed air enriched with oxygen."]),

    ("q016", 3, "Which of these parts of a house shares its name with a viewing area on a computer screen?",
     ["Door", "Window", "Roof", "Floor"], 1,
     ["On a computer screen each program draws inside a window, a rectangular viewing area.",
      "The word window names both a part of a house and a viewing area on a computer screen.",
      "Graphical interfaces show documents in a window on the computer screen."],
     ["The front door of a house usually faces the street.",
      "A roof protects a house from rain and snow.",
      "Oak floor boards are common in old houses."]),
    ("q017", 3, "Which element has the chemical symbol Fe?", ["Iron", "Lead", "Tin", "Gold"], 0,
     ["Iron has the chemical symbol Fe, from the Latin word ferrum.",
      "The element iron, symbol Fe, is the main component of steel.",
      "Fe is the chemical symbol of iron, element number 26."],
     ["Lead has the chemical symbol Pb.",
      "Gold has the chemical symbol Au, from the Latin aurum.",
      "Tin has the symbol Sn and resists corrosion."]),
    ("q018", 3, "Who painted the Mona Lisa?",
     ["Michelangelo", "Leonardo da Vinci", "Raphael", "Donatello"], 1,
     ["Leonardo da Vinci painted the Mona Lisa in Florence in the early sixteenth century.",
      "The Mona Lisa, painted by Leonardo da Vinci, hangs in the Louvre.",
      "Leonardo da Vinci worked on the Mona Lisa for many years."],
     ["Michelangelo painted the ceiling of the Sistine Chapel.",
      "Raphael painted the School of Athens in the Vatican.",
      "Donatello was a sculptor known for his bronze David."]),
    ("q019", 3, "According to the saying, a stitch in time saves what?", ["Nine", "Ten", "Two", "Many"], 0,
     ["A stitch in time saves nine, so mend small tears before they grow.",
      "My grandmother always said a stitch in time saves nine.",
      "The saying a stitch in time saves nine dates back to the eighteenth century."],
     ["Ten pins stand at the end of a bowling lane.",
      "Many hands make light work, as the other saying goes."]),
    ("q020", 3, "What is the hardest natural substance?", ["Gold", "Iron", "Diamond", "Quartz"], 2,
     ["Diamond is the hardest natural substance and scores 10 on the Mohs scale.",
      "No natural substance is harder than diamond, which is why it cuts glass.",
      "Industrial drills are tipped with diamond, the hardest natural material."],
     ["Quartz is a common mineral found in granite and sand.",
      "Gold is soft enough to be shaped by hand.",
      "Iron is strong but rusts when exposed to water."]),
    ("q021", 3, "Which of these is not a noble gas?", ["Neon", "Argon", "Helium", "Chlorine"], 3,
     ["Neon is a noble gas that glows red in advertising signs.",
      "Argon is the most common noble gas in the atmosphere.",
      "Helium, the lightest noble gas, does not react with other elements.",
      "The noble gases include helium, neon and argon."],
     ["Chlorine is a reactive halogen used to disinfect swimming pools.",
      "Chlorine combines with sodium to form table salt."]),

    ("q022", 4, "In what year did the Titanic sink?", ["1905", "1912", "1918", "1923"], 1,
     ["The Titanic sank in April 1912 after striking an iceberg.",
      "In 1912 the Titanic sank on her maiden voyage to New York.",
      "More than 1500 people died when the Titanic sank in 1912."],
     ["The First World War ended in 1918.",
      "In 1905 Einstein published his paper on special relativity.",
      "The Hollywood sign was erected in 1923."]),
    ("q023", 4, "Which composer wrote the Moonlight Sonata?", ["Mozart", "Beethoven", "Bach", "Chopin"], 1,
     ["Beethoven wrote the Moonlight Sonata in 1801.",
      "The Moonlight Sonata is the popular name of a piano sonata Beethoven wrote for a pupil.",
      "The composer Beethoven never called it the Moonlight Sonata; a critic gave it the name."],
     ["Mozart wrote more than forty symphonies.",
      "Bach composed the Brandenburg Concertos.",
      "Chopin wrote nocturnes and mazurkas for solo piano."]),
    ("q024", 4, "What is the currency of Japan?", ["Yuan", "Won", "Yen", "Rupee"], 2,
     ["The yen is the currency of Japan, issued by the Bank of Japan.",
      "Travellers to Japan exchange money for yen, the national currency.",
      "Japan adopted the yen as its currency in 1871."],
     ["The yuan is the currency of China.",
      "The rupee is used in India and Pakistan.",
      "South Korea uses the won."]),
    ("q025", 4, "Which Shakespeare play features the character Shylock?",
     ["Hamlet", "Macbeth", "The Merchant of Venice", "Othello"], 2,
     ["Shylock is the moneylender in the Shakespeare play The Merchant of Venice.",
      "The Merchant of Venice features Shylock, who demands a pound of flesh.",
      "In The Merchant of Venice, the character Shylock lends money to Antonio."],
     ["Hamlet is the prince of Denmark in a Shakespeare tragedy.",
      "Macbeth murders King Duncan in Scotland.",
      "Othello is deceived by Iago."]),
    ("q026", 4, "The Great Barrier Reef lies off the coast of which country?",
     ["Australia", "Brazil", "Indonesia", "Philippines"], 0,
     ["The Great Barrier Reef lies off the coast of Queensland in Australia.",
      "Australia protects the Great Barrier Reef as a marine park off its northeast coast.",
      "Divers travel to Australia to explore the Great Barrier Reef."],
     ["Brazil is the largest country in South America.",
      "Indonesia is made up of thousands of islands.",
      "The Philippines lie in the western Pacific."]),
    ("q027", 4, "Which of these is not one of the Great Lakes?", ["Superior", "Huron", "Erie", "Tahoe"], 3,
     ["Lake Superior is the largest of the Great Lakes.",
      "Lake Huron and Lake Erie are two of the five Great Lakes.",
      "The Great Lakes are Superior, Michigan, Huron, Erie and Ontario."],
     ["Lake Tahoe is a deep alpine lake on the border of California and Nevada.",
      "Skiers visit Tahoe every winter."]),

    ("q028", 5, "Who was the first person to walk on the Moon?",
     ["Buzz Aldrin", "Neil Armstrong", "Yuri Gagarin", "John Glenn"], 1,
     ["Neil Armstrong was the first person to walk on the Moon, in July 1969.",
      "Apollo 11 commander Neil Armstrong became the first person to walk on the lunar surface of the Moon.",
      "The first person to walk on the Moon, Neil Armstrong, spoke of one small step."],
     ["Buzz Aldrin followed Armstrong down the ladder of the lunar module.",
      "Yuri Gagarin was the first human in space in 1961.",
      "John Glenn was the first American to orbit the Earth."]),
    ("q029", 5, "Which scientist proposed the theory of general relativity?",
     ["Isaac Newton", "Albert Einstein", "Niels Bohr", "Max Planck"], 1,
     ["Albert Einstein proposed the theory of general relativity in 1915.",
      "General relativity, the theory proposed by Albert Einstein, describes gravity as curved spacetime.",
      "The scientist Albert Einstein extended special relativity into the general theory of relativity."],
     ["Isaac Newton formulated the laws of motion and universal gravitation.",
      "Niels Bohr proposed a model of the atom with electron shells.",
      "Max Planck introduced the quantum of energy."]),
    ("q030", 5, "What is the longest river in South America?", ["Amazon", "Orinoco", "Parana", "Magdalena"], 0,
     ["The Amazon is the longest river in South America and carries more water than any other.",
      "Flowing across Brazil, the Amazon is the longest river on the continent of South America.",
      "South America's longest river, the Amazon, rises in the Andes of Peru."],
     ["The Orinoco flows through Venezuela.",
      "The Parana river forms part of the border of Argentina.",
      "The Magdalena river runs through Colombia."]),
    ("q031", 5, "According to an old saying, an apple a day keeps the what away?",
     ["doctor", "dentist", "teacher", "lawyer"], 0,
     ["An apple a day keeps the doctor away, or so the old saying goes.",
      "Parents still repeat that an apple a day keeps the doctor away.",
      "Nutritionists debate whether an apple a day keeps the doctor away."],
     ["A dentist recommends brushing twice a day.",
      "The teacher handed out apples to the class.",
      "A lawyer reviewed the contract."]),
    ("q032", 5, "Which chess piece can only move diagonally?", ["Rook", "Bishop", "Knight", "King"], 1,
     ["In chess the bishop can only move diagonally and stays on one color.",
      "A bishop moves diagonally any number of squares across the chess board.",
      "Each side has two bishops, a chess piece that can only move along diagonals diagonally."],
     ["The rook moves in straight lines along ranks and files.",
      "The knight moves in an L shape and can jump over pieces.",
      "The king moves one square in any direction."]),
    ("q033", 5, "The Rosetta Stone helped scholars decipher which writing system?",
     ["Cuneiform", "Hieroglyphs", "Runes", "Linear B"], 1,
     ["The Rosetta Stone helped scholars decipher Egyptian hieroglyphs.",
      "Champollion used the Rosetta Stone to decipher hieroglyphs in 1822.",
      "Because the Rosetta Stone repeats one text in Greek and hieroglyphs, scholars could decipher the writing system."],
     ["Cuneiform was pressed into clay tablets in Mesopotamia.",
      "Runes were carved by Norse peoples.",
      "Linear B was deciphered by Michael Ventris."]),

    ("q034", 6, "Which novel begins with the line \"Call me Ishmael\"?",
     ["Moby Dick", "Treasure Island", "Robinson Crusoe", "The Odyssey"], 0,
     ["Moby Dick begins with the line Call me Ishmael.",
      "Herman Melville opens the novel Moby Dick with Call me Ishmael.",
      "The famous first line of Moby Dick, Call me Ishmael, introduces the narrator."],
     ["Treasure Island tells of pirates and buried gold.",
      "Robinson Crusoe is shipwrecked on an island.",
      "The Odyssey follows Odysseus home from Troy."]),
    ("q035", 6, "What is the name of the bone in the thigh?", ["Femur", "Tibia", "Humerus", "Radius"], 0,
     ["The femur is the bone in the thigh and the longest bone in the body.",
      "The thigh contains a single bone, the femur.",
      "A broken femur, the thigh bone, takes months to heal."],
     ["The tibia is the shin bone of the lower leg.",
      "The humerus runs from the shoulder to the elbow.",
      "The radius is one of two bones in the forearm."]),
    ("q036", 6, "Which of these cities is not a national capital?",
     ["Canberra", "Ottawa", "Sydney", "Brasilia"], 2,
     ["Canberra is the national capital of Australia.",
      "Ottawa is the national capital of Canada.",
      "Brasilia became the national capital of Brazil in 1960.",
      "Planned cities such as Canberra and Brasilia were built to be capitals."],
     ["Sydney is famous for its harbour bridge and opera house.",
      "Sydney is the largest city in Australia."]),
    ("q037", 6, "Which artist cut off part of his own ear?",
     ["Vincent van Gogh", "Claude Monet", "Pablo Picasso", "Salvador Dali"], 0,
     ["Vincent van Gogh cut off part of his own ear in Arles in 1888.",
      "After a quarrel with Gauguin, the artist Vincent van Gogh cut off part of his ear.",
      "Vincent van Gogh painted a self portrait with a bandaged ear."],
     ["Claude Monet painted water lilies in his garden at Giverny.",
      "Pablo Picasso co-founded cubism.",
      "Salvador Dali painted melting clocks."]),
    ("q038", 6, "Marie Curie won Nobel Prizes in physics and which other field?",
     ["Chemistry", "Medicine", "Literature", "Peace"], 0,
     ["Marie Curie won Nobel Prizes in physics in 1903 and chemistry in 1911.",
      "Marie Curie is the only person to win Nobel Prizes in both physics and chemistry.",
      "Her discovery of radium earned Marie Curie the Nobel Prize in chemistry, after her physics prize."],
     ["The Nobel Peace Prize is awarded in Oslo.",
      "The Nobel Prize in Literature has gone to many novelists.",
      "The Nobel Prize in Medicine recognizes work in physiology."]),
    ("q039", 6, "Odin is the chief god in which mythology?", ["Greek", "Norse", "Egyptian", "Roman"], 1,
     ["Odin is the chief god in Norse mythology and rules Asgard.",
      "In Norse mythology Odin, the chief of the gods, gave an eye for wisdom.",
      "Norse mythology names Odin as the chief god and father of Thor."],
     ["Zeus is the king of the gods in Greek myths.",
      "Ra was the sun god of ancient Egypt.",
      "Jupiter was the king of the Roman gods."]),

    ("q040", 7, "Which element was named after the Greek word for violet?",
     ["Iodine", "Indium", "Iridium", "Vanadium"], 0,
     ["Iodine was named after the Greek word for violet because of the color of its vapor.",
      "The element iodine takes its name from the Greek word iodes, meaning violet.",
      "Heated iodine gives off a violet gas, which is how the element was named."],
     ["Indium was named for the indigo line in its spectrum.",
      "Iridium was named after the Greek goddess of the rainbow.",
      "Vanadium was named after Vanadis, a Scandinavian goddess."]),
    ("q041", 7, "The Treaty of Westphalia ended which war?",
     ["Hundred Years War", "Thirty Years War", "Seven Years War", "War of the Roses"], 1,
     ["The Treaty of Westphalia ended the Thirty Years War in 1648.",
      "Signed in 1648, the Peace of Westphalia ended the Thirty Years War in central Europe.",
      "The Thirty Years War was ended by the Treaty of Westphalia."],
     ["The Hundred Years War was fought between England and France.",
      "The Seven Years War involved most of the great powers of Europe.",
      "The War of the Roses was a struggle for the English throne."]),
    ("q042", 7, "Who is said to have fiddled while Rome burned?", ["Nero", "Caligula", "Augustus", "Tiberius"], 0,
     ["Nero is said to have fiddled while Rome burned in the great fire of 64 AD.",
      "Legend claims the emperor Nero fiddled while Rome burned.",
      "Historians doubt that Nero fiddled while Rome burned, since the fiddle did not yet exist."],
     ["Caligula was known for his cruelty and extravagance.",
      "Augustus was the first Roman emperor.",
      "Tiberius spent his last years on the island of Capri."]),
    ("q043", 7, "What is the smallest prime number?", ["Zero", "One", "Two", "Three"], 2,
     ["Two is the smallest prime number and the only even prime number.",
      "The smallest prime number is two, since one is not considered prime.",
      "Every prime number greater than two is odd, so two is the smallest and only even prime."],
     ["Zero was introduced as a number by Indian mathematicians.",
      "Three is the number of sides of a triangle."]),
    ("q044", 7, "Which philosopher was the teacher of Alexander the Great?",
     ["Plato", "Aristotle", "Socrates", "Pythagoras"], 1,
     ["Aristotle was the teacher of Alexander the Great at the court of Macedon.",
      "The philosopher Aristotle tutored the young Alexander the Great.",
      "Philip of Macedon hired Aristotle as teacher for his son Alexander the Great."],
     ["Plato founded the Academy in Athens.",
      "Socrates was sentenced to drink hemlock.",
      "Pythagoras is remembered for a theorem about right triangles."]),
    ("q045", 7, "Which of these is not a moon of Jupiter?", ["Io", "Europa", "Ganymede", "Titan"], 3,
     ["Io is a volcanic moon of Jupiter.",
      "Europa, a moon of Jupiter, may hide an ocean under its ice.",
      "Ganymede is the largest moon of Jupiter and of the solar system.",
      "Galileo discovered the moons of Jupiter Io, Europa and Ganymede."],
     ["Titan is the largest moon of Saturn and has a thick atmosphere.",
      "The Titan rocket family launched many satellites."]),
]

# Documents hosted as PDFs that assert a wrong answer. Queries exclude them.
PDF_DECOYS = [
    ("q001", "The capital of France is Berlin according to this draft handout."),
    ("q003", "Exam sheet: the sky on a clear day is green."),
    ("q006", "Slides: Venus is the planet closest to the sun."),
    ("q012", "Atlas notes: the Atlantic is the largest ocean on Earth."),
    ("q014", "Reading list: Charles Dickens wrote Romeo and Juliet."),
    ("q017", "Quiz key: the chemical symbol Fe belongs to lead."),
    ("q020", "Brochure: quartz is the hardest natural substance."),
    ("q022", "Timeline: the Titanic sank in 1905."),
    ("q023", "Program notes: Mozart wrote the Moonlight Sonata."),
    ("q024", "Travel flyer: the currency of Japan is the yuan."),
    ("q029", "Lecture: Isaac Newton proposed the theory of general relativity."),
    ("q030", "Geography handout: the Orinoco is the longest river in South America."),
    ("q033", "Course pack: the Rosetta Stone helped scholars decipher cuneiform writing."),
    ("q039", "Mythology notes: Odin is the chief god in Greek mythology."),
    ("q044", "Study guide: Plato was the teacher of Alexander the Great."),
]

FILLER_TOPICS = [
    ("bread", "Bread dough rises when yeast ferments sugar and releases bubbles."),
    ("tea", "Green tea and black tea come from the same plant."),
    ("weather", "Cumulus clouds form on warm afternoons and may grow into storms."),
    ("football", "A football match lasts ninety minutes plus stoppage time."),
    ("tennis", "Tennis players score love, fifteen, thirty and forty."),
    ("gardening", "Tomatoes need plenty of sunshine and regular watering."),
    ("trains", "Steam locomotives were replaced by diesel engines in the twentieth century."),
    ("cheese", "Cheddar cheese is aged for months to develop its sharp flavor."),
    ("volcanoes", "Lava cools into basalt when it reaches the surface."),
    ("bicycles", "A bicycle chain transfers power from the pedals to the rear wheel."),
    ("coffee", "Coffee beans are roasted to bring out their aroma."),
    ("birds", "Migratory birds navigate using the stars and magnetic fields."),
    ("glaciers", "Glaciers carve valleys as they slowly flow downhill."),
    ("printing", "Gutenberg's press made books cheaper to produce."),
    ("bridges", "Suspension bridges hang their decks from steel cables."),
    ("deserts", "Cacti store water in their thick stems."),
    ("rivers", "Rivers deposit silt on flood plains, making the soil fertile."),
    ("clocks", "Pendulum clocks keep time through regular swings."),
    ("spices", "Pepper was once so valuable that it was used as currency."),
    ("mountains", "Mountain air is thinner, so water boils at a lower temperature."),
]

FILLER_EXTRA = [
    "Many people enjoy the subject on weekends.",
    "Local libraries keep several books on the topic.",
    "The history of the subject goes back centuries.",
    "Schools sometimes organize trips to learn more about it.",
    "Enthusiasts share tips in clubs and online forums.",
]


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(2002)

    with open(out_dir / "bank.jsonl", "w", encoding="utf-8") as f:
        for qid, level, text, choices, answer, _, _ in QUESTIONS:
            f.write(json.dumps({"id": qid, "level": level, "question": text,
                                "choices": choices, "answer": answer}) + "\n")

    docs = []
    for qid, _, _, _, _, support, other in QUESTIONS:
        for i, text in enumerate(support):
            docs.append({"url": f"https://encyclopedia.example.org/{qid}/s{i}.html", "text": text})
        for i, text in enumerate(other):
            docs.append({"url": f"https://facts.example.net/{qid}/o{i}.html", "text": text})
    for qid, text in PDF_DECOYS:
        docs.append({"url": f"https://files.example.com/{qid}/handout.pdf", "text": text})
    for topic, text in FILLER_TOPICS:
        for i in range(2):
            extra = rng.sample(FILLER_EXTRA, 2)
            docs.append({"url": f"https://blog.example.org/{topic}/{i}.html",
                         "text": " ".join([text] + extra)})

    rng.shuffle(docs)
    with open(out_dir / "corpus.jsonl", "w", encoding="utf-8") as f:
        for n, doc in enumerate(docs, start=1):
            f.write(json.dumps({"id": f"d{n:04d}", **doc}) + "\n")
    print(f"{len(QUESTIONS)} questions, {len(docs)} documents -> {out_dir}", file=sys.stderr)


if __name__ == "__main__":
    main()
