"""Built-in demo corpus: five contact records plus a base vocabulary.

The records exercise every interesting path: shared cities and states (menu
reuse), multi-word titles and companies, second address lines, zip+4 codes,
and one to three phone numbers per contact. The vocabulary stands in for a
device's built-in recognition dictionary: common given and family names,
job-title words, and street terms. Company names, city names, and state
abbreviations are deliberately absent, which is what makes the
add-to-dictionary condition earn its keep on a second pass.
"""

from __future__ import annotations

from .records import (
    ADDRESS,
    ADDRESS2,
    CITY,
    COMPANY,
    FIRST_NAME,
    FieldValue,
    LAST_NAME,
    PHONE1,
    PHONE2,
    PHONE3,
    Provenance,
    Record,
    STATE,
    TITLE,
    ZIP_CODE,
)

_DEMO_ROWS = [
    {
        FIRST_NAME: "Robert",
        LAST_NAME: "Anderson",
        TITLE: "Account Marketing Rep",
        COMPANY: "IBM",
        ADDRESS: "W 201 N River Drive",
        CITY: "Spokane",
        STATE: "WA",
        ZIP_CODE: "99201",
        PHONE1: "509 555 0000",
        PHONE2: "509 555 1111",
    },
    {
        FIRST_NAME: "Eric",
        LAST_NAME: "Brice",
        TITLE: "Director of Engineering",
        COMPANY: "RAIMA Corp",
        ADDRESS: "3245 146th Place SE",
        CITY: "Bellevue",
        STATE: "WA",
        ZIP_CODE: "98007",
        PHONE1: "206 555 2222",
        PHONE2: "206 555 3333",
        PHONE3: "205 555 4444",
    },
    {
        FIRST_NAME: "Mike",
        LAST_NAME: "Carlson",
        TITLE: "VP Engineering & Estimating",
        COMPANY: "General Construction",
        ADDRESS: "2111 N Northgate Way",
        ADDRESS2: "Suite 305",
        CITY: "Seattle",
        STATE: "WA",
        ZIP_CODE: "98133",
        PHONE1: "206 555 5555",
        PHONE2: "206 555 6666",
    },
    {
        FIRST_NAME: "Peter",
        LAST_NAME: "Friedman",
        TITLE: "President",
        COMPANY: "NOVA Information Systems",
        ADDRESS: "12277 134th Court NE",
        ADDRESS2: "Suite 203",
        CITY: "Redmond",
        STATE: "WA",
        ZIP_CODE: "98052",
        PHONE1: "206 555 7777",
    },
    {
        FIRST_NAME: "Thomas",
        LAST_NAME: "Leland",
        TITLE: "Staffing Manager",
        COMPANY: "Aldus Corporation",
        ADDRESS: "411 First Ave South",
        CITY: "Seattle",
        STATE: "WA",
        ZIP_CODE: "98104 2871",
        PHONE1: "206 555 8888",
        PHONE2: "206 555 9999",
    },
]

# Given/family names, job-title words, and street vocabulary a shipped
# recognizer would already know. Companies, cities, and "WA" are left out on
# purpose (all-caps trademarks and two-letter codes are classic dictionary
# gaps); short omissions still pass letter-by-letter, long ones must be typed.
BASE_VOCABULARY = (
    "Robert",
    "Anderson",
    "Eric",
    "Brice",
    "Mike",
    "Carlson",
    "Peter",
    "Friedman",
    "Thomas",
    "Leland",
    "Account",
    "Marketing",
    "Rep",
    "Director",
    "of",
    "Engineering",
    "Estimating",
    "President",
    "Staffing",
    "Manager",
    "River",
    "Drive",
    "Place",
    "Way",
    "Court",
    "Suite",
    "First",
    "Ave",
    "South",
)


def demo_records() -> list[Record]:
    records = []
    for n, row in enumerate(_DEMO_ROWS, start=1):
        record = Record(id=f"demo{n}")
        for fid, raw in row.items():
            record.set(fid, FieldValue(raw, Provenance.TYPED))
        records.append(record)
    return records


def demo_record(n: int) -> Record:
    return demo_records()[n - 1]
