//! Columns, symbols, column parity, parity classes, doublet recovery and
//! validity for both so(3) and osp(1|2).

use std::fmt;
use std::str::FromStr;

use crate::error::{ClassicalViolation, Error, Result, SuperViolation};
use crate::half_integer::HalfInt;

/// One (j, m) column of a symbol.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Column {
    j: HalfInt,
    m: HalfInt,
}

impl Column {
    pub fn new(j: HalfInt, m: HalfInt) -> Result<Self> {
        if j.is_negative() {
            return Err(Error::Parse(format!("negative spin {j}")));
        }
        Ok(Column { j, m })
    }

    pub fn j(self) -> HalfInt {
        self.j
    }

    pub fn m(self) -> HalfInt {
        self.m
    }

    /// `2(j + m)`, always an exact integer.
    pub fn plus_twice(self) -> i64 {
        self.j.twice() + self.m.twice()
    }

    /// `2(j - m)`.
    pub fn minus_twice(self) -> i64 {
        self.j.twice() - self.m.twice()
    }
}

/// Parity of `2(j ± m)`; both signs give the same parity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ColumnParity {
    Ev,
    Od,
}

pub fn column_parity(c: Column) -> ColumnParity {
    if c.plus_twice() % 2 == 0 {
        ColumnParity::Ev
    } else {
        ColumnParity::Od
    }
}

/// Intrinsic parity class of a symbol from its three column parities.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ParityClass {
    Alpha,
    /// `Beta { kappa, primed: false }`: column kappa even, the other two odd.
    /// Primed: column kappa odd, the other two even.
    Beta {
        kappa: u8,
        primed: bool,
    },
    Gamma,
}

impl ParityClass {
    pub fn label(self) -> String {
        match self {
            ParityClass::Alpha => "alpha".into(),
            ParityClass::Beta {
                kappa,
                primed: false,
            } => format!("beta{kappa}"),
            ParityClass::Beta {
                kappa,
                primed: true,
            } => format!("beta{kappa}p"),
            ParityClass::Gamma => "gamma".into(),
        }
    }
}

/// The recovered so(3) doublet member: `2l = [j+m] + [j-m]`, so `l` is `j` or
/// `j - 1/2`.
pub fn recover_doublet(c: Column) -> HalfInt {
    let fp = HalfInt::from_twice(c.plus_twice()).floor();
    let fm = HalfInt::from_twice(c.minus_twice()).floor();
    HalfInt::from_twice(fp + fm)
}

/// Three columns with projections summing to zero.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol3j {
    columns: [Column; 3],
}

impl Symbol3j {
    pub fn new(columns: [Column; 3]) -> Result<Self> {
        let sum: i64 = columns.iter().map(|c| c.m.twice()).sum();
        if sum != 0 {
            return Err(Error::ProjectionSumNonzero);
        }
        Ok(Symbol3j { columns })
    }

    /// Convenience constructor from doubled spins and projections.
    pub fn from_twice(tj: [i64; 3], tm: [i64; 3]) -> Result<Self> {
        let mut cols = [Column {
            j: HalfInt::ZERO,
            m: HalfInt::ZERO,
        }; 3];
        for k in 0..3 {
            cols[k] = Column::new(HalfInt::from_twice(tj[k]), HalfInt::from_twice(tm[k]))?;
        }
        Symbol3j::new(cols)
    }

    pub fn columns(&self) -> [Column; 3] {
        self.columns
    }

    pub fn column(&self, k: usize) -> Column {
        self.columns[k]
    }

    pub fn j(&self, k: usize) -> HalfInt {
        self.columns[k].j
    }

    pub fn m(&self, k: usize) -> HalfInt {
        self.columns[k].m
    }

    /// Doubled `j_k^+ = j_k + m_k` for k = 0, 1, 2.
    pub fn plus_twice(&self) -> [i64; 3] {
        [0, 1, 2].map(|k| self.columns[k].plus_twice())
    }

    /// Doubled `j_k^- = j_k - m_k`.
    pub fn minus_twice(&self) -> [i64; 3] {
        [0, 1, 2].map(|k| self.columns[k].minus_twice())
    }

    /// Doubled perimeter `2(j1 + j2 + j3)`.
    pub fn perimeter_twice(&self) -> i64 {
        self.columns.iter().map(|c| c.j.twice()).sum()
    }

    /// Sort/canonical key.
    pub fn key(&self) -> [i64; 6] {
        let c = &self.columns;
        [
            c[0].j.twice(),
            c[1].j.twice(),
            c[2].j.twice(),
            c[0].m.twice(),
            c[1].m.twice(),
            c[2].m.twice(),
        ]
    }

    pub fn permuted(&self, perm: [usize; 3]) -> Symbol3j {
        Symbol3j {
            columns: perm.map(|k| self.columns[k]),
        }
    }

    pub fn m_negated(&self) -> Symbol3j {
        Symbol3j {
            columns: self.columns.map(|c| Column { j: c.j, m: -c.m }),
        }
    }

    /// Triangle condition on the three spins.
    pub fn triangle_holds(&self) -> bool {
        triangle_holds(self.j(0), self.j(1), self.j(2))
    }

    pub fn classify_parity(&self) -> ParityClass {
        let p = self.columns.map(column_parity);
        let odd = p.iter().filter(|&&x| x == ColumnParity::Od).count();
        match odd {
            0 => ParityClass::Alpha,
            3 => ParityClass::Gamma,
            1 => {
                let kappa = p.iter().position(|&x| x == ColumnParity::Od).unwrap();
                ParityClass::Beta {
                    kappa: kappa as u8 + 1,
                    primed: true,
                }
            }
            _ => {
                let kappa = p.iter().position(|&x| x == ColumnParity::Ev).unwrap();
                ParityClass::Beta {
                    kappa: kappa as u8 + 1,
                    primed: false,
                }
            }
        }
    }

    /// so(3) validity: all columns even, integer perimeter, triangle,
    /// `|m_k| <= j_k`.
    pub fn validate_classical(&self) -> std::result::Result<(), ClassicalViolation> {
        for (k, c) in self.columns.iter().enumerate() {
            if column_parity(*c) == ColumnParity::Od {
                return Err(ClassicalViolation::OddColumn(k + 1));
            }
        }
        if self.perimeter_twice() % 2 != 0 {
            return Err(ClassicalViolation::NonIntegerPerimeter);
        }
        if !self.triangle_holds() {
            return Err(ClassicalViolation::Triangle);
        }
        for (k, c) in self.columns.iter().enumerate() {
            if c.m.abs() > c.j {
                return Err(ClassicalViolation::ProjectionRange(k + 1));
            }
        }
        Ok(())
    }

    /// The recovered doublet triple (l1, l2, l3).
    pub fn doublets(&self) -> [HalfInt; 3] {
        self.columns.map(recover_doublet)
    }

    /// osp(1|2) validity: triangle on the j's, then the recovered parent
    /// (l1 l2 l3) must be a triangle with integer perimeter, and
    /// `|m_k| <= l_k`.
    pub fn validate_super(&self) -> std::result::Result<(), SuperViolation> {
        if !self.triangle_holds() {
            return Err(SuperViolation::JTriangle);
        }
        let l = self.doublets();
        let perim: i64 = l.iter().map(|x| x.twice()).sum();
        if perim % 2 != 0 || !triangle_holds(l[0], l[1], l[2]) {
            return Err(SuperViolation::Parent);
        }
        for k in 0..3 {
            if self.m(k).abs() > l[k] {
                return Err(SuperViolation::ProjectionRange(k + 1));
            }
        }
        Ok(())
    }

    /// The so(3) parent symbol (l1 l2 l3; m1 m2 m3) of a valid super symbol.
    pub fn parent(&self) -> Result<Symbol3j> {
        match self.validate_super() {
            Ok(()) => {}
            Err(SuperViolation::Parent) => return Err(Error::ForbiddenParent),
            Err(v) => return Err(Error::NotSuper(v)),
        }
        let l = self.doublets();
        let mut cols = self.columns;
        for k in 0..3 {
            cols[k].j = l[k];
        }
        Symbol3j::new(cols)
    }
}

pub fn triangle_holds(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    (a - b).abs() <= c && c <= a + b
}

impl fmt::Display for Symbol3j {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} {} {} / {} {} {})",
            self.j(0),
            self.j(1),
            self.j(2),
            self.m(0),
            self.m(1),
            self.m(2)
        )
    }
}

impl fmt::Debug for Symbol3j {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Symbol3j {
    type Err = Error;

    /// Six half-integer tokens, j-triple then `/` then m-triple, separated by
    /// single spaces: `"1 1 0 / 1 -1 0"`.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split(' ').collect();
        if tokens.len() != 7 || tokens[3] != "/" {
            return Err(Error::Parse(format!(
                "expected `j1 j2 j3 / m1 m2 m3`, got {s:?}"
            )));
        }
        let h = |t: &str| t.parse::<HalfInt>();
        let mut cols = [Column {
            j: HalfInt::ZERO,
            m: HalfInt::ZERO,
        }; 3];
        for k in 0..3 {
            cols[k] = Column::new(h(tokens[k])?, h(tokens[k + 4])?)?;
        }
        Symbol3j::new(cols)
    }
}
