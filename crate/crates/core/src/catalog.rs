//! Named permutations, reduced words and tableaux of the worked examples.
//!
//! Permutations use string notation with `a = 10`, `b = 11`, `c = 12`; words
//! list generator indices in the same digits. Tableaux rows are separated by
//! `" / "`. In type B the generator `0` is the sign change `s` and `1` is `t`.

/// One named datum with a human readable location of where it comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub value: &'static str,
    pub location: &'static str,
}

const fn entry(key: &'static str, value: &'static str, location: &'static str) -> CatalogEntry {
    CatalogEntry { key, value, location }
}

const GL8: &str = "GL8 realisation";
const GL12: &str = "GL12 realisation";
const GL13: &str = "GL13 remark";
const N4: &str = "n = 4 slice example";
const B2: &str = "B2 cell module example";

static CATALOG: &[CatalogEntry] = &[
    entry("b2.cell", "0 10 010", B2),
    entry("n4.x", "2143", N4),
    entry("n4.y", "4231", N4),
    entry("gl8.u", "21654387", GL8),
    entry("gl8.v", "62845173", GL8),
    entry("gl8.u.generators", "13457", GL8),
    entry("gl12.x", "438721a965cb", GL12),
    entry("gl12.y", "4387a2c691b5", GL12),
    entry("gl12.x.word", "b567895678712345123431", GL12),
    entry("gl12.y.word", "56789aba1234567897845671234531", GL12),
    entry("gl12.x.P", "1 5 9 b / 2 6 a c / 3 7 / 4 8", GL12),
    entry("gl12.x.Q", "1 3 7 b / 2 4 8 c / 5 9 / 6 a", GL12),
    entry("gl12.y.P", "1 5 9 b / 2 6 a c / 3 7 / 4 8", GL12),
    entry("gl12.y.Q", "1 3 5 7 / 2 4 9 b / 6 8 / a c", GL12),
    entry("gl13.x.word", "12132156543765438798765ba98c", GL13),
    entry("gl13.y.word", "121321546543765438798765aba9876cba98", GL13),
];

/// The whole table, in a fixed order.
pub fn load_catalog() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn lookup(key: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.key == key)
}

/// Value of a key known to be present.
pub fn value(key: &str) -> &'static str {
    lookup(key).map(|e| e.value).unwrap_or_else(|| panic!("unknown catalog key {key}"))
}
