//! Lattice recognition, structural classes, and the Möbius function.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poset::{bits, Poset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    NotALattice,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotALattice => write!(f, "poset is not a lattice"),
        }
    }
}

impl std::error::Error for LatticeError {}

/// Result of lattice recognition; meet and join tables are present exactly
/// when the poset is a lattice.
#[derive(Debug, Clone)]
pub struct LatticeStructure {
    pub is_lattice: bool,
    pub meet: Option<Vec<Vec<usize>>>,
    pub join: Option<Vec<Vec<usize>>>,
}

/// Structural class flags of a bounded lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeClasses {
    pub atomic: bool,
    pub relatively_atomic: bool,
    pub semimodular: bool,
    pub geometric: bool,
}

/// Möbius function values on all comparable pairs, in exact integers.
#[derive(Debug, Clone)]
pub struct MobiusTable {
    values: BTreeMap<(usize, usize), BigInt>,
}

impl MobiusTable {
    pub fn get(&self, x: usize, y: usize) -> Option<&BigInt> {
        self.values.get(&(x, y))
    }

    /// Whether μ(x, y) is defined and zero.
    pub fn is_zero_at(&self, x: usize, y: usize) -> Option<bool> {
        self.values.get(&(x, y)).map(|mu| mu.is_zero())
    }

    /// The comparable pairs with vanishing Möbius value, in index order.
    pub fn zero_pairs(&self) -> Vec<(usize, usize)> {
        self.values
            .iter()
            .filter(|(_, mu)| mu.is_zero())
            .map(|(&pair, _)| pair)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.values.iter()
    }
}

/// The least element of `candidates` (as a mask), if it exists: the unique
/// member below every other member.
fn least_of(p: &Poset, candidates: u64) -> Option<usize> {
    bits(candidates).find(|&c| candidates & !p.up_mask(c) == 0)
}

fn greatest_of(p: &Poset, candidates: u64) -> Option<usize> {
    bits(candidates).find(|&c| candidates & !p.down_mask(c) == 0)
}

/// Decide whether every pair has a join and a meet; return the tables when
/// they all exist. The empty poset is not considered a lattice.
pub fn lattice_structure(p: &Poset) -> LatticeStructure {
    let n = p.len();
    if n == 0 {
        return LatticeStructure {
            is_lattice: false,
            meet: None,
            join: None,
        };
    }
    let mut join = vec![vec![0usize; n]; n];
    let mut meet = vec![vec![0usize; n]; n];
    for x in 0..n {
        for y in 0..n {
            let Some(j) = least_of(p, p.up_mask(x) & p.up_mask(y)) else {
                return LatticeStructure {
                    is_lattice: false,
                    meet: None,
                    join: None,
                };
            };
            let Some(m) = greatest_of(p, p.down_mask(x) & p.down_mask(y)) else {
                return LatticeStructure {
                    is_lattice: false,
                    meet: None,
                    join: None,
                };
            };
            join[x][y] = j;
            meet[x][y] = m;
        }
    }
    LatticeStructure {
        is_lattice: true,
        meet: Some(meet),
        join: Some(join),
    }
}

/// Classify a (bounded) lattice: atomic, relatively atomic, semimodular,
/// geometric. Errors when the input is not a lattice.
pub fn lattice_classes(p: &Poset) -> Result<LatticeClasses, LatticeError> {
    let structure = lattice_structure(p);
    let (Some(join), Some(_)) = (structure.join.as_ref(), structure.meet.as_ref()) else {
        return Err(LatticeError::NotALattice);
    };
    let meet = structure.meet.as_ref().unwrap();
    let n = p.len();

    // Join of the atoms of [a, b] that lie below x; atoms of an interval
    // are the covers of its bottom (intervals are convex).
    let join_of_atoms_below = |a: usize, b_mask: u64, x: usize| -> usize {
        let mut acc = a;
        for c in 0..n {
            if p.is_cover(a, c) && b_mask & (1 << c) != 0 && p.leq(c, x) {
                acc = join[acc][c];
            }
        }
        acc
    };

    let bottom = bits(p.minimal_mask()).next().expect("lattice is nonempty");
    let atomic = (0..n).all(|x| join_of_atoms_below(bottom, p.full_mask(), x) == x);

    let mut relatively_atomic = true;
    'outer: for a in 0..n {
        for b in bits(p.up_mask(a)) {
            let interval = p.up_mask(a) & p.down_mask(b);
            for x in bits(interval) {
                if join_of_atoms_below(a, interval, x) != x {
                    relatively_atomic = false;
                    break 'outer;
                }
            }
        }
    }

    let mut semimodular = true;
    'semi: for x in 0..n {
        for y in 0..n {
            if p.is_cover(meet[x][y], x) && !p.is_cover(y, join[x][y]) {
                semimodular = false;
                break 'semi;
            }
        }
    }

    Ok(LatticeClasses {
        atomic,
        relatively_atomic,
        semimodular,
        geometric: atomic && semimodular,
    })
}

/// Möbius function on all comparable pairs, by the defining recursion
/// μ(x,x) = 1, μ(x,y) = −Σ_{x≤z<y} μ(x,z); also reports whether it is
/// nowhere zero.
pub fn mobius_function(p: &Poset) -> (MobiusTable, bool) {
    let order = p.topo_order();
    let mut values: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    let mut nowhere_zero = true;
    for &x in &order {
        for &y in &order {
            if !p.leq(x, y) {
                continue;
            }
            let mu = if x == y {
                BigInt::one()
            } else {
                let mut sum = BigInt::zero();
                for z in bits(p.up_mask(x) & p.down_mask(y)) {
                    if z != y {
                        sum += values.get(&(x, z)).expect("topological order");
                    }
                }
                -sum
            };
            if mu.is_zero() {
                nowhere_zero = false;
            }
            values.insert((x, y), mu);
        }
    }
    (MobiusTable { values }, nowhere_zero)
}
