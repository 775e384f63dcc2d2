use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};
use crate::matrix::{int, zeros, IntMatrix};
use crate::nil2::Class2Group;

/// A finite group by multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Shape("group table must be square over the element list".into()));
        }
        if (0..n).any(|x| table[0][x] != x || table[x][0] != x) {
            return Err(Error::Invalid("element 0 is not the identity".into()));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(Error::Invalid(format!("not associative at ({}, {}, {})", names[x], names[y], names[z])));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n).find(|&y| table[x][y] == 0).ok_or_else(|| Error::Invalid(format!("{} has no inverse", names[x])))?;
            inverses.push(y);
        }
        Ok(FiniteGroup { names, table, inverses })
    }

    pub fn trivial() -> Self {
        FiniteGroup { names: vec!["1".into()], table: vec![vec![0]], inverses: vec![0] }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::new(names, table).expect("cyclic group")
    }

    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (a, b) = (self.order(), other.order());
        let mut names = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in 0..b {
                names.push(format!("({},{})", self.names[i], other.names[j]));
            }
        }
        let table = (0..a * b)
            .map(|x| (0..a * b).map(|y| self.table[x / b][y / b] * b + other.table[x % b][y % b]).collect())
            .collect();
        FiniteGroup::new(names, table).expect("product of groups")
    }

    /// The elements of a finite class-2 group.
    pub fn from_class2(g: &Class2Group) -> Result<Self> {
        let elems = g.elements()?;
        let id = g.identity();
        let mut order: Vec<_> = vec![id.clone()];
        order.extend(elems.into_iter().filter(|x| *x != id));
        let index: std::collections::HashMap<_, _> = order.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        let table = order.iter().map(|x| order.iter().map(|y| index[&g.mul(x, y)]).collect()).collect();
        FiniteGroup::new(order.iter().map(|x| g.show(x)).collect(), table)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|x| x == name).ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| self.table[x][y] == self.table[y][x]))
    }

    /// `G_ab` presented on all elements with relations `[xy] = [x] + [y]`.
    pub fn abelianization(&self) -> FinAbGroup {
        let n = self.order();
        let mut rows = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let mut r = zeros(n);
                r[self.table[x][y]] += int(1);
                r[x] -= int(1);
                r[y] -= int(1);
                rows.push(r);
            }
        }
        FinAbGroup::new(n, IntMatrix::from_rows(n, rows))
    }
}
