"""Ring, ideal and corpus texts for grammar round trips."""

RING_TEXTS = [
    "Z",
    "Z/2",
    "Z/12",
    "Z/60",
    "Z x Z/4",
    "Z x Z/2",
    "Z/4 x Z/9",
    "Z/2 x Z/3 x Z",
    "Z x Z",
    "Z/6 x Z/10 x Z/15",
    "  Z/4   x  Z ",
    "idealize(Z/2)",
    "idealize(Z/4)",
    "idealize(Z/12)",
    "idealize(Z/6, mod gen 2)",
    "idealize(Z/8, mod gen 4)",
    "idealize(Z/4, mod gen)",
    "idealize(Z/2 x Z/2)",
    "idealize(Z/2) x Z",
    "idealize(quot(Z, gen 6))",
    "quot(Z, gen 12)",
    "quot(Z, gen 0)",
    "quot(Z, gen 4, 6)",
    "quot(Z/12, gen 4)",
    "quot(Z/12, gen)",
    "quot(Z x Z/4, gen (2,2))",
    "quot(Z x Z, gen (3,5))",
    "quot(idealize(Z/2), gen (0,1))",
    "quot(idealize(Z/4), gen (2,0))",
    "quot(idealize(Z/3), gen)",
    "quot(quot(Z, gen 24), gen 8)",
    "quot(loc(Z, {2}), gen 3)",
    "loc(Z, {2})",
    "loc(Z, {2,3})",
    "loc(Z, {6})",
    "loc(Z, {1})",
    "loc(Z, {4, 9, 25})",
    "loc(Z/12, {5})",
    "loc(Z/9, {2, 4})",
    "loc(Z x Z/4, {3})",
    "loc(loc(Z, {2}), {3})",
    "loc(Z, {5}) x Z/7",
    "loc(Z,{30})",
    "Z/3 x loc(Z, {2}) x idealize(Z/2)",
    "quot(Z/2 x Z/3 x Z/5, gen (1,0,0))",
    "quot(Z x Z/6, gen (0,2))",
    "idealize(Z/9, mod gen 3) x Z/2",
    "loc(quot(Z, gen 10), {3})",
    "quot(idealize(Z/6), gen (3,0))",
    "Z/5 x Z/5 x Z/5",
]

IDEAL_TEXTS = [
    ("Z", "gen 4"),
    ("Z", "gen 4, 6"),
    ("Z", "gen"),
    ("Z/12", "gen 8"),
    ("Z/12", "gen 3, 4"),
    ("Z x Z/4", "gen (0,2)"),
    ("Z x Z/4", "gen (4,1), (6,0)"),
    ("idealize(Z/2)", "gen (0,1)"),
    ("loc(Z, {2})", "gen 12"),
    ("Z/2 x Z/3 x Z", "gen (1,0,5)"),
]

CORPUS_TEXTS = [
    ("zn:2..10", 9),
    ("zn:2..60", 59),
    ("prod(zn:2..20, zn:2..20):size<=400", 361),
    ("prod(zn:2..20, zn:2..20):size<=100", 187),
    ("ideal(z) x zn:2..8", 7),
    ("idealize(zn:2..12)", 11),
    ("z; Z x Z/2; zn:3..4", 4),
    ("zn:2..5 | idealize(Z/2)", 5),
]

BAD_RINGS = ["", "quot(Z, gen 1, 0)", "Q", "Z/", "Z/1", "Z/0", "Z x", "quot(Z, gen 1)", "loc(Z, {0})", "idealize(Z)", "Z/4 Z", "loc(Z/12, {2})"]
