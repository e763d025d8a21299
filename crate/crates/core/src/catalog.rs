//! Classification of compact simply connected irreducible symmetric spaces.
//!
//! Type I spaces come from a compact simple algebra with an involution; the
//! Type II spaces are the compact simple groups with a bi-invariant metric.
//! Each entry records the ambient root system, the restricted root system,
//! and the Killing-form squared length of the highest restricted root.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::killing::{killing_delta_sq, perp_simple_roots};
use crate::root_system::{Family, RootSystem, RootSystemKind};
use crate::scalar::{format_rational, rat};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Table {
    /// Type I spaces.
    T41,
    /// Type II spaces (compact simple groups).
    T42,
}

impl FromStr for Table {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "4.1" | "t41" | "1" | "i" | "type1" => Ok(Table::T41),
            "4.2" | "t42" | "2" | "ii" | "type2" => Ok(Table::T42),
            other => Err(Error::Parse(format!("unknown table {other:?} (use 4.1 or 4.2)"))),
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Table::T41 => "4.1",
            Table::T42 => "4.2",
        })
    }
}

/// A row of the classification, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceLabel {
    AI { n: usize },
    AII { n: usize },
    AIII { p: usize, q: usize },
    BDI { p: usize, q: usize },
    CI { n: usize },
    CII { p: usize, q: usize },
    DIII { n: usize },
    EI,
    EII,
    EIII,
    EIV,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    FII,
    G,
    Group(RootSystemKind),
}

const EXCEPTIONAL: [(&str, SpaceLabel); 12] = [
    ("EI", SpaceLabel::EI),
    ("EII", SpaceLabel::EII),
    ("EIII", SpaceLabel::EIII),
    ("EIV", SpaceLabel::EIV),
    ("EV", SpaceLabel::EV),
    ("EVI", SpaceLabel::EVI),
    ("EVII", SpaceLabel::EVII),
    ("EVIII", SpaceLabel::EVIII),
    ("EIX", SpaceLabel::EIX),
    ("FI", SpaceLabel::FI),
    ("FII", SpaceLabel::FII),
    ("G", SpaceLabel::G),
];

impl SpaceLabel {
    pub fn series(&self) -> &'static str {
        match self {
            SpaceLabel::AI { .. } => "AI",
            SpaceLabel::AII { .. } => "AII",
            SpaceLabel::AIII { .. } => "AIII",
            SpaceLabel::BDI { .. } => "BDI",
            SpaceLabel::CI { .. } => "CI",
            SpaceLabel::CII { .. } => "CII",
            SpaceLabel::DIII { .. } => "DIII",
            SpaceLabel::Group(_) => "GROUP",
            other => EXCEPTIONAL
                .iter()
                .find(|(_, l)| l == other)
                .map(|(s, _)| *s)
                .expect("exceptional label"),
        }
    }

    pub fn table(&self) -> Table {
        match self {
            SpaceLabel::Group(_) => Table::T42,
            _ => Table::T41,
        }
    }

    /// Checks the parameter ranges this catalog supports.
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: &str| {
            Err(Error::InvalidParams {
                series: self.series().to_string(),
                reason: reason.to_string(),
            })
        };
        match *self {
            SpaceLabel::AI { n } | SpaceLabel::AII { n } if n < 2 => fail("requires n >= 2"),
            SpaceLabel::CI { n } if n < 1 => fail("requires n >= 1"),
            SpaceLabel::DIII { n } if n < 4 => fail("requires n >= 4"),
            SpaceLabel::AIII { p, q } | SpaceLabel::CII { p, q } | SpaceLabel::BDI { p, q }
                if p < 1 || p > q =>
            {
                fail("requires 1 <= p <= q")
            }
            SpaceLabel::BDI { p, q } if p + q < 5 => {
                fail("requires p + q >= 5 (smaller cases are not covered by the table rows)")
            }
            SpaceLabel::BDI { p, q } if p == q && p < 4 => fail("p = q requires p >= 4"),
            SpaceLabel::Group(kind) if !kind.is_reduced() => {
                fail("a compact simple group has a reduced root system")
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SpaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.series();
        match self {
            SpaceLabel::AI { n } | SpaceLabel::AII { n } | SpaceLabel::CI { n } | SpaceLabel::DIII { n } => {
                write!(f, "{s}:n={n}")
            }
            SpaceLabel::AIII { p, q } | SpaceLabel::BDI { p, q } | SpaceLabel::CII { p, q } => {
                write!(f, "{s}:p={p},q={q}")
            }
            SpaceLabel::Group(kind) => write!(f, "{s}:{kind}"),
            _ => f.write_str(s),
        }
    }
}

impl FromStr for SpaceLabel {
    type Err = Error;

    /// Grammar: `SERIES[(:|,)key=value(,key=value)*]`, e.g. `AIII:p=2,q=5`,
    /// `G`, `GROUP:e8`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, rest) = match t.find([':', ',']) {
            Some(i) => (&t[..i], &t[i + 1..]),
            None => (t.as_str(), ""),
        };
        let series = head.to_ascii_uppercase();
        let bad = |msg: String| Error::Parse(format!("label {s:?}: {msg}"));

        if series == "GROUP" {
            let kind = rest.strip_prefix("kind=").unwrap_or(rest);
            if kind.is_empty() {
                return Err(bad("GROUP needs a root system, e.g. GROUP:e8".into()));
            }
            let label = SpaceLabel::Group(kind.parse()?);
            label.validate()?;
            return Ok(label);
        }

        let mut n = None;
        let mut p = None;
        let mut q = None;
        for pair in rest.split(',').filter(|x| !x.is_empty()) {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got {pair:?}")))?;
            let v: usize = v
                .parse()
                .map_err(|_| bad(format!("{k} must be a nonnegative integer")))?;
            let slot = match k.to_ascii_lowercase().as_str() {
                "n" => &mut n,
                "p" => &mut p,
                "q" => &mut q,
                other => return Err(bad(format!("unknown parameter {other:?}"))),
            };
            if slot.replace(v).is_some() {
                return Err(bad(format!("parameter {k} given twice")));
            }
        }
        let need = |x: Option<usize>, name: &str| x.ok_or_else(|| bad(format!("missing {name}")));
        let no_params = |label: SpaceLabel| {
            if n.is_some() || p.is_some() || q.is_some() {
                Err(bad(format!("{series} takes no parameters")))
            } else {
                Ok(label)
            }
        };
        let only_n = |x: Option<usize>| {
            if p.is_some() || q.is_some() {
                Err(bad(format!("{series} takes only n")))
            } else {
                need(x, "n")
            }
        };
        let only_pq = || {
            if n.is_some() {
                Err(bad(format!("{series} takes p and q")))
            } else {
                Ok((need(p, "p")?, need(q, "q")?))
            }
        };
        let label = match series.as_str() {
            "AI" => SpaceLabel::AI { n: only_n(n)? },
            "AII" => SpaceLabel::AII { n: only_n(n)? },
            "CI" => SpaceLabel::CI { n: only_n(n)? },
            "DIII" => SpaceLabel::DIII { n: only_n(n)? },
            "AIII" => {
                let (p, q) = only_pq()?;
                SpaceLabel::AIII { p, q }
            }
            "BDI" => {
                let (p, q) = only_pq()?;
                SpaceLabel::BDI { p, q }
            }
            "CII" => {
                let (p, q) = only_pq()?;
                SpaceLabel::CII { p, q }
            }
            other => match EXCEPTIONAL.iter().find(|(name, _)| *name == other) {
                Some((_, label)) => no_params(*label)?,
                None => return Err(bad(format!("unknown series {head:?}"))),
            },
        };
        label.validate()?;
        Ok(label)
    }
}

/// A root system named by family and rank, possibly below the family's
/// standard rank range, together with the isomorphic system actually built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realized {
    pub nominal: String,
    pub kind: RootSystemKind,
    /// 0-based node of `kind` for each nominal simple root.
    pub node_map: Vec<usize>,
}

/// Realizes `family` at `rank`, resolving the low-rank coincidences
/// `b1 = c1 = a1`, `c2 = b2` and `d3 = a3`.
pub fn realize(family: Family, rank: usize) -> Result<Realized> {
    let nominal = match RootSystemKind::new(family, rank) {
        Ok(kind) => {
            return Ok(Realized {
                nominal: kind.to_string(),
                kind,
                node_map: (0..rank).collect(),
            })
        }
        Err(_) => {
            let prefix = match family {
                Family::B => "b",
                Family::C => "c",
                Family::D => "d",
                _ => "",
            };
            format!("{prefix}{rank}")
        }
    };
    let alias = |kind: &str, node_map: Vec<usize>| {
        Ok(Realized {
            nominal: nominal.clone(),
            kind: kind.parse()?,
            node_map,
        })
    };
    match (family, rank) {
        (Family::B | Family::C, 1) => alias("a1", vec![0]),
        // c2: a1 short, a2 long; b2: a1 long, a2 short.
        (Family::C, 2) => alias("b2", vec![1, 0]),
        // d3 branch node a1 becomes the middle node of a3.
        (Family::D, 3) => alias("a3", vec![1, 0, 2]),
        _ => Err(Error::InvalidParams {
            series: nominal.clone(),
            reason: "no irreducible root system of this type and rank".into(),
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceEntry {
    pub label: SpaceLabel,
    pub table: Table,
    /// Conventional name, e.g. `SU(4)/SO(4)`.
    pub model: String,
    /// Which sub-row of the table applies, when the row splits.
    pub case: Option<String>,
    pub ambient: Realized,
    pub restricted: Realized,
    /// `(psi, psi) / (delta, delta)`: one or one half.
    pub restriction_factor: Rational,
    /// Killing-form squared length of the highest restricted root.
    pub psi_sq_killing: Rational,
    /// Black Satake nodes, 1-based, in the node order of the realized
    /// ambient system.
    pub satake_black_nodes: Option<Vec<usize>>,
    pub canonical_epsilon: Option<Rational>,
}

impl Serialize for SpaceEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SpaceEntry", 12)?;
        st.serialize_field("label", &self.label.to_string())?;
        st.serialize_field("series", self.label.series())?;
        st.serialize_field("table", &self.table.to_string())?;
        st.serialize_field("model", &self.model)?;
        st.serialize_field("case", &self.case)?;
        st.serialize_field("ambient", &self.ambient.nominal)?;
        st.serialize_field("ambient_realized", &self.ambient.kind.to_string())?;
        st.serialize_field("restricted", &self.restricted.nominal)?;
        st.serialize_field("restricted_realized", &self.restricted.kind.to_string())?;
        st.serialize_field("restriction_factor", &format_rational(&self.restriction_factor))?;
        st.serialize_field("psi_sq_killing", &format_rational(&self.psi_sq_killing))?;
        st.serialize_field("satake_black_nodes", &self.satake_black_nodes)?;
        st.serialize_field(
            "canonical_epsilon",
            &self.canonical_epsilon.as_ref().map(format_rational),
        )?;
        st.end()
    }
}

struct RowData {
    model: String,
    case: Option<String>,
    ambient: (Family, usize),
    restricted: (Family, usize),
    half: bool,
    /// 1-based, nominal ambient labeling.
    satake: Option<Vec<usize>>,
}

fn odd_up_to(n: usize) -> Vec<usize> {
    (1..=n).step_by(2).collect()
}

fn row_data(label: &SpaceLabel) -> RowData {
    use Family::*;
    let row = |model: String, case: Option<&str>, ambient, restricted, half, satake| RowData {
        model,
        case: case.map(str::to_string),
        ambient,
        restricted,
        half,
        satake,
    };
    let ex = |model: &str, ambient: Family, restricted: (Family, usize), half, satake: Option<Vec<usize>>| {
        row(
            model.to_string(),
            None,
            (ambient, ambient.fixed_rank().unwrap()),
            restricted,
            half,
            satake,
        )
    };
    match *label {
        SpaceLabel::AI { n } => row(format!("SU({n})/SO({n})"), None, (A, n - 1), (A, n - 1), false, Some(vec![])),
        SpaceLabel::AII { n } => row(
            format!("SU({})/Sp({n})", 2 * n),
            None,
            (A, 2 * n - 1),
            (A, n - 1),
            true,
            Some(odd_up_to(2 * n - 1)),
        ),
        SpaceLabel::AIII { p, q } => {
            let (case, restricted) = grassmann_case(p, q);
            row(
                format!("G_{{{p},{q}}}(C)"),
                Some(case),
                (A, p + q - 1),
                restricted,
                false,
                Some((p + 1..q).collect()),
            )
        }
        SpaceLabel::CI { n } => row(format!("Sp({n})/U({n})"), None, (C, n), (C, n), false, Some(vec![])),
        SpaceLabel::CII { p, q } => {
            let (case, restricted) = grassmann_case(p, q);
            let n = p + q;
            let black = if p == q {
                odd_up_to(n - 1)
            } else {
                odd_up_to(2 * p - 1).into_iter().chain(2 * p + 1..=n).collect()
            };
            row(format!("G_{{{p},{q}}}(H)"), Some(case), (C, n), restricted, true, Some(black))
        }
        SpaceLabel::BDI { p, q } => {
            let n = p + q;
            let l = n / 2;
            let (ambient, black) = if n % 2 == 1 {
                ((B, l), (p + 1..=l).collect())
            } else if p + 2 <= l {
                ((D, l), (p + 1..=l).collect())
            } else {
                ((D, l), vec![])
            };
            let (case, restricted) = if p == 1 {
                ("1=p<q", (A, 1))
            } else if p < q {
                ("2<=p<q", (B, p))
            } else {
                ("4<=p=q", (D, p))
            };
            row(format!("G_{{{p},{q}}}(R)"), Some(case), ambient, restricted, p == 1, Some(black))
        }
        SpaceLabel::DIII { n } => {
            let (case, restricted, black) = if n % 2 == 0 {
                ("n even", (C, n / 2), odd_up_to(n - 1))
            } else {
                ("n odd", (BC, (n - 1) / 2), odd_up_to(n - 2))
            };
            row(format!("SO({})/U({n})", 2 * n), Some(case), (D, n), restricted, false, Some(black))
        }
        SpaceLabel::EI => ex("(e6, sp(4))", E6, (E6, 6), false, Some(vec![])),
        SpaceLabel::EII => ex("(e6, su(6)+su(2))", E6, (F4, 4), false, Some(vec![])),
        SpaceLabel::EIII => ex("(e6, so(10)+R)", E6, (BC, 2), false, Some(vec![2, 3, 4])),
        SpaceLabel::EIV => ex("(e6, f4)", E6, (A, 2), true, Some(vec![2, 3, 4, 6])),
        SpaceLabel::EV => ex("(e7, su(8))", E7, (E7, 7), false, Some(vec![])),
        SpaceLabel::EVI => ex("(e7, so(12)+su(2))", E7, (F4, 4), false, Some(vec![1, 3, 7])),
        SpaceLabel::EVII => ex("(e7, e6+R)", E7, (C, 3), false, Some(vec![3, 4, 5, 7])),
        SpaceLabel::EVIII => ex("(e8, so(16))", E8, (E8, 8), false, Some(vec![])),
        SpaceLabel::EIX => ex("(e8, e7+su(2))", E8, (F4, 4), false, Some(vec![4, 5, 6, 8])),
        SpaceLabel::FI => ex("(f4, sp(3)+su(2))", F4, (F4, 4), false, Some(vec![])),
        SpaceLabel::FII => ex("(f4, so(9))", F4, (BC, 1), true, Some(vec![1, 2, 3])),
        SpaceLabel::G => ex("(g2, su(2)+su(2))", G2, (G2, 2), false, Some(vec![])),
        SpaceLabel::Group(kind) => {
            let l = kind.rank();
            let model = match kind.family() {
                A => format!("SU({})", l + 1),
                B => format!("Spin({})", 2 * l + 1),
                C => format!("Sp({l})"),
                D => format!("Spin({})", 2 * l),
                E6 => "E6".into(),
                E7 => "E7".into(),
                E8 => "E8".into(),
                F4 => "F4".into(),
                G2 => "G2".into(),
                BC => unreachable!("validated"),
            };
            let case = match kind.family() {
                B if l <= 3 => Some("n<=3"),
                B => Some("n>=4"),
                A if (l + 1) % 2 == 0 => Some("n even"),
                A => Some("n odd"),
                _ => None,
            };
            row(model, case, (kind.family(), l), (kind.family(), l), true, None)
        }
    }
}

/// Restricted system of the complex and quaternionic Grassmannians.
fn grassmann_case(p: usize, q: usize) -> (&'static str, (Family, usize)) {
    if p == 1 {
        ("p=1", (Family::BC, 1))
    } else if p == q {
        ("p=q>=2", (Family::C, p))
    } else {
        ("2<=p<q", (Family::BC, p))
    }
}

/// Whether the paper-sourced list assigns the factor 1/2: AII, CII, EIV,
/// FII, and BDI with real rank one.
fn listed_half(label: &SpaceLabel) -> bool {
    matches!(
        label,
        SpaceLabel::AII { .. } | SpaceLabel::CII { .. } | SpaceLabel::EIV | SpaceLabel::FII | SpaceLabel::BDI { p: 1, .. }
    )
}

/// Builds the full catalog entry for a label.
pub fn resolve(label: &SpaceLabel) -> Result<SpaceEntry> {
    label.validate()?;
    let data = row_data(label);
    debug_assert_eq!(data.half || label.table() == Table::T42, listed_half(label) || label.table() == Table::T42);
    let ambient = realize(data.ambient.0, data.ambient.1)?;
    let restricted = realize(data.restricted.0, data.restricted.1)?;
    let factor = if data.half || listed_half(label) {
        rat(1, 2)
    } else {
        Rational::one()
    };
    let delta_sq = killing_delta_sq(&RootSystem::build(ambient.kind)?)?;
    let psi_sq_killing = &factor * delta_sq;
    let satake_black_nodes = data
        .satake
        .map(|nodes| nodes.iter().map(|&i| ambient.node_map[i - 1] + 1).collect::<Vec<_>>())
        .map(|mut v| {
            v.sort_unstable();
            v
        });
    let canonical_epsilon = match *label {
        SpaceLabel::BDI { p, q } => Some(Rational::new(1.into(), (2 * (p + q - 2)).into())),
        _ => None,
    };
    Ok(SpaceEntry {
        label: *label,
        table: label.table(),
        model: data.model,
        case: data.case,
        ambient,
        restricted,
        restriction_factor: factor,
        psi_sq_killing,
        satake_black_nodes,
        canonical_epsilon,
    })
}

/// Lemma-style cross-check: the black Satake nodes all lie in `Pi ∩ delta^perp`
/// exactly when the restriction factor is one.
pub fn lemma32_crosscheck(entry: &SpaceEntry) -> Result<bool> {
    let black = entry
        .satake_black_nodes
        .as_ref()
        .ok_or_else(|| Error::MissingSatakeData(entry.label.to_string()))?;
    let rs = RootSystem::build(entry.ambient.kind)?;
    let perp = perp_simple_roots(&rs);
    let contained = black.iter().all(|&i| perp.contains(&(i - 1)));
    Ok(contained == entry.restriction_factor.is_one())
}

/// All labels of a table with parameters up to `bound`, in table order and
/// then lexicographic parameter order.
pub fn table_labels(table: Table, bound: usize) -> Vec<SpaceLabel> {
    let mut out = Vec::new();
    let pairs = |min_sum: usize| {
        (1..=bound)
            .flat_map(move |p| (p..=bound).map(move |q| (p, q)))
            .filter(move |(p, q)| p + q >= min_sum)
    };
    match table {
        Table::T41 => {
            out.extend((2..=bound).map(|n| SpaceLabel::AI { n }));
            out.extend((2..=bound).map(|n| SpaceLabel::AII { n }));
            out.extend(pairs(2).map(|(p, q)| SpaceLabel::AIII { p, q }));
            out.extend((1..=bound).map(|n| SpaceLabel::CI { n }));
            out.extend(pairs(2).map(|(p, q)| SpaceLabel::CII { p, q }));
            out.extend(
                pairs(5)
                    .map(|(p, q)| SpaceLabel::BDI { p, q })
                    .filter(|l| l.validate().is_ok()),
            );
            out.extend((4..=bound).map(|n| SpaceLabel::DIII { n }));
            out.extend(EXCEPTIONAL.iter().map(|(_, l)| *l));
        }
        Table::T42 => {
            let group = |f: Family, r: usize| SpaceLabel::Group(RootSystemKind::new(f, r).unwrap());
            out.extend((2..=bound).map(|n| group(Family::A, n - 1)));
            out.extend((2..=bound).map(|n| group(Family::B, n)));
            out.extend((3..=bound).map(|n| group(Family::C, n)));
            out.extend((4..=bound).map(|n| group(Family::D, n)));
            for f in [Family::E6, Family::E7, Family::E8, Family::F4, Family::G2] {
                out.push(group(f, f.fixed_rank().unwrap()));
            }
        }
    }
    out
}

pub fn enumerate_table(table: Table, bound: usize) -> Vec<SpaceEntry> {
    table_labels(table, bound)
        .iter()
        .map(|l| resolve(l).expect("table labels are valid"))
        .collect()
}
