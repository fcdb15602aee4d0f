import pytest

from pdef import parse_presentation

P_TEXT = """\
gens: x, y, z
rel: x^3
rel: y^3
rel: z^3
rel: (x*y)^3
rel: (x*z)^3
rel: (y*z)^3
"""

DINF_TEXT = """\
gens: x1, x2
rel: x1^2
rel: x2^2
"""

S3_TEXT = """\
gens: a, b
rel: a^2
rel: b^2
rel: (a*b)^3
"""

# four generators, abelianization Z^4, and killing two generators leaves
# a free group of rank 2
RANK4_TEXT = """\
gens: a, b, c, d
rel: [c^-1, a^-1]
rel: [d^-1, b^-1]
rel: a*d*c^-1*a^-1*b*c*d^-1*b^-1
"""

Q8_TEXT = """\
gens: a, b
rel: a^4
rel: a^2*b^-2
rel: b^-1*a*b*a
"""


@pytest.fixture
def triangle_power_pres():
    return parse_presentation(P_TEXT)


@pytest.fixture
def dinf():
    return parse_presentation(DINF_TEXT)


@pytest.fixture
def s3_pres():
    return parse_presentation(S3_TEXT)


@pytest.fixture
def rank4_pres():
    return parse_presentation(RANK4_TEXT)


@pytest.fixture
def q8_pres():
    return parse_presentation(Q8_TEXT)


# small finite presentations for corpus-style checks
CORPUS_TEXTS = [
    S3_TEXT,
    DINF_TEXT,
    Q8_TEXT,
    "gens: a\nrel: a^3\n",
    "gens: a\nrel: a^6\n",
    "gens: a, b\nrel: a^2\nrel: b^3\nrel: (a*b)^2\n",
    "gens: a, b\nrel: a^3\nrel: b^2\nrel: [a,b]\n",
    "gens: a, b\nrel: a^4\nrel: b^2\nrel: (a*b)^2\n",
]


@pytest.fixture
def finite_corpus():
    return [parse_presentation(t) for t in CORPUS_TEXTS]
