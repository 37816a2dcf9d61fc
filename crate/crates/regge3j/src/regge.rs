//! The Regge array, the five Regge transformations, the 12-element classical
//! symmetry classes and orbit closure under the filtered Regge maps.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::half_integer::HalfInt;
use crate::symbol::Symbol3j;

/// 3x3 Regge array: first row the triangle coordinates, second row `j_k - m_k`,
/// third row `j_k + m_k`. Rows and columns all sum to `j1 + j2 + j3`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ReggeArray {
    pub entries: [[HalfInt; 3]; 3],
}

pub fn regge_array(s: &Symbol3j) -> ReggeArray {
    let tj = [s.j(0).twice(), s.j(1).twice(), s.j(2).twice()];
    let dp = s.plus_twice();
    let dm = s.minus_twice();
    let row = |t: [i64; 3]| t.map(HalfInt::from_twice);
    ReggeArray {
        entries: [
            row([
                -tj[0] + tj[1] + tj[2],
                tj[0] - tj[1] + tj[2],
                tj[0] + tj[1] - tj[2],
            ]),
            row(dm),
            row(dp),
        ],
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 2, 0],
    [2, 0, 1],
    [0, 2, 1],
    [2, 1, 0],
    [1, 0, 2],
];

/// The twelve classical images: column permutations times optional m-negation.
pub fn classical_images(s: &Symbol3j) -> Vec<Symbol3j> {
    let mut out = Vec::with_capacity(12);
    for perm in PERMUTATIONS {
        let p = s.permuted(perm);
        out.push(p.m_negated());
        out.push(p);
    }
    out
}

/// The 12-element symmetry class of a symbol, keyed by its lexicographically
/// minimal member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SetClass {
    canonical: Symbol3j,
}

impl SetClass {
    pub fn of(s: &Symbol3j) -> SetClass {
        let canonical = classical_images(s)
            .into_iter()
            .min_by_key(|x| x.key())
            .expect("twelve images");
        SetClass { canonical }
    }

    pub fn canonical(&self) -> Symbol3j {
        self.canonical
    }

    pub fn members(&self) -> Vec<Symbol3j> {
        let mut v = classical_images(&self.canonical);
        v.sort_by_key(|x| x.key());
        v.dedup();
        v
    }
}

pub fn classical_set(s: &Symbol3j) -> SetClass {
    SetClass::of(s)
}

/// One of the five Regge transformations, exactly as written: R1-R3 fix one
/// column and mix the j-plus/j-minus parameters of the other two; R4 builds
/// all three spins from half-sums of the j-minus parameters, R5 from the
/// j-plus parameters.
///
/// Fails when a half-sum is not a half-integer, which happens when the map is
/// applied formally to a super symbol whose parity does not match it.
pub fn apply_regge(s: &Symbol3j, kappa: u8) -> Result<Symbol3j> {
    let tj = [s.j(0).twice(), s.j(1).twice(), s.j(2).twice()];
    let dp = s.plus_twice();
    let dm = s.minus_twice();
    let half = |x: i64| -> Result<i64> {
        if x % 2 != 0 {
            return Err(Error::ReggeNotApplicable(kappa));
        }
        Ok(x / 2)
    };
    let (tjp, tmp): ([i64; 3], [i64; 3]) = match kappa {
        1 => (
            [tj[0], half(dm[2] + dm[1])?, half(dp[2] + dp[1])?],
            [tj[1] - tj[2], half(dm[2] - dm[1])?, half(dp[2] - dp[1])?],
        ),
        // The projection signs here are reversed relative to the obvious
        // cyclic image of R1: that variant is the composition with a global
        // m-negation and would flip the value for odd perimeter. This form is
        // the transpose of the Regge array followed by even row/column
        // permutations, hence exactly value-preserving like the other four.
        2 => (
            [half(dm[0] + dm[2])?, tj[1], half(dp[0] + dp[2])?],
            [half(dm[2] - dm[0])?, tj[0] - tj[2], half(dp[2] - dp[0])?],
        ),
        3 => (
            [half(dm[1] + dm[0])?, half(dp[1] + dp[0])?, tj[2]],
            [half(dm[1] - dm[0])?, half(dp[1] - dp[0])?, tj[0] - tj[1]],
        ),
        4 => {
            let j = [
                half(dm[2] + dm[1])?,
                half(dm[0] + dm[2])?,
                half(dm[1] + dm[0])?,
            ];
            (j, [j[0] - dp[0], j[1] - dp[1], j[2] - dp[2]])
        }
        5 => {
            let j = [
                half(dp[2] + dp[1])?,
                half(dp[0] + dp[2])?,
                half(dp[1] + dp[0])?,
            ];
            (j, [dm[0] - j[0], dm[1] - j[1], dm[2] - j[2]])
        }
        _ => return Err(Error::Internal(format!("Regge index {kappa} out of range"))),
    };
    if tjp.iter().any(|&t| t < 0) {
        return Err(Error::ReggeNotApplicable(kappa));
    }
    Symbol3j::from_twice(tjp, tmp)
        .map_err(|_| Error::Internal("Regge image violates projection sum".into()))
}

/// Distinct symmetry classes reachable by repeated Regge transformation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitReport {
    /// Sorted by canonical representative.
    pub classes: Vec<SetClass>,
    /// `|classes| - 1`.
    pub n_empty: usize,
}

/// Breadth-first closure over classes: for each member of each known class,
/// apply the transformations admitted by `accept` and keep new classes.
pub fn closure_with<F>(s: &Symbol3j, mut images: F) -> OrbitReport
where
    F: FnMut(&Symbol3j) -> Vec<Symbol3j>,
{
    let start = SetClass::of(s);
    let mut seen: HashSet<SetClass> = HashSet::new();
    let mut queue: VecDeque<SetClass> = VecDeque::new();
    seen.insert(start);
    queue.push_back(start);
    while let Some(class) = queue.pop_front() {
        for member in class.members() {
            for image in images(&member) {
                let c = SetClass::of(&image);
                if seen.insert(c) {
                    queue.push_back(c);
                }
            }
        }
    }
    let classes: BTreeSet<SetClass> = seen.into_iter().collect();
    let classes: Vec<SetClass> = classes.into_iter().collect();
    let n_empty = classes.len() - 1;
    OrbitReport { classes, n_empty }
}

/// Full Regge closure of a classical (or alpha/gamma super) symbol.
pub fn orbit(s: &Symbol3j) -> OrbitReport {
    closure_with(s, |member| {
        (1..=5)
            .filter_map(|k| apply_regge(member, k).ok())
            .collect()
    })
}
