use crate::abelian::{AbMap, FinAbGroup};
use crate::cross::{PointedGroupoid, PresentedGroup};
use crate::matrix::{int, zeros, IntMatrix};
use crate::nil2::FreeWord;

/// `Ad₁ G`: the free crossed module on `Mor G → ⟨Ob G⟩` modulo `u = g + f` whenever `u = f ∘ g`.
#[derive(Clone, Debug)]
pub struct PresentedCrossedModule {
    pub groupoid: PointedGroupoid,
    /// `∂(h: U → V) = −U + V`, the basepoint letter dropped.
    pub boundary: Vec<FreeWord>,
    /// `(u, f, g)` with `u = f ∘ g`, read as the relation `u = g + f`.
    pub relations: Vec<(usize, usize, usize)>,
}

pub fn ad1(g: &PointedGroupoid) -> PresentedCrossedModule {
    let letter = |x: usize, e: i8| if x == 0 { vec![] } else { vec![(x - 1, e)] };
    let boundary = g
        .arrows()
        .iter()
        .map(|a| {
            let mut w = letter(a.source, -1);
            w.extend(letter(a.target, 1));
            FreeWord::new(w).reduced()
        })
        .collect();
    let mut relations: Vec<(usize, usize, usize)> =
        g.composition_table().iter().map(|(&(f, gg), &u)| (u, f, gg)).collect();
    relations.sort_unstable();
    PresentedCrossedModule { groupoid: g.clone(), boundary, relations }
}

impl PresentedCrossedModule {
    /// `h0 = ⟨Ob G | ∂(Mor G)⟩`.
    pub fn h0_presentation(&self) -> PresentedGroup {
        PresentedGroup { gens: self.groupoid.objects().clone(), relators: self.boundary.clone() }
    }

    /// Rank of `⟨Iso G⟩`: the number of non-base isomorphism classes.
    pub fn h0_closed_rank(&self) -> usize {
        self.groupoid.iso_classes().len() - 1
    }

    /// `⊕ Aut(x)_ab ⊗ R` over isomorphism classes, `R = Z[⟨Iso G⟩]`; `None` when it is not finitely generated.
    pub fn h1_closed(&self) -> Option<FinAbGroup> {
        let g = &self.groupoid;
        let classes = g.iso_classes();
        let auts: Vec<FinAbGroup> = classes.iter().map(|c| g.automorphisms(c[0]).0.abelianization()).collect();
        if classes.len() == 1 {
            return Some(auts[0].clone());
        }
        auts.iter().all(|a| a.is_trivial()).then(FinAbGroup::trivial)
    }

    /// `h1` from the presentation alone, when `h0` is trivial or every arrow is an identity.
    ///
    /// With `∂` onto a free group, `ker ∂` is central and split off, so it is the kernel of
    /// `M_ab = Z[Mor]/(u − g − f) → Z[Ob − *]`.
    pub fn h1_computed(&self) -> Option<FinAbGroup> {
        let g = &self.groupoid;
        let arrows = g.arrows();
        if arrows.len() == g.nobjects() {
            return Some(FinAbGroup::trivial());
        }
        if self.h0_presentation().free_rank_if_free() != Some(0) {
            return None;
        }
        let na = arrows.len();
        let rows = self
            .relations
            .iter()
            .map(|&(u, f, gg)| {
                let mut r = zeros(na);
                r[u] += int(1);
                r[f] -= int(1);
                r[gg] -= int(1);
                r
            })
            .collect();
        let mab = FinAbGroup::from_relation_rows(na, rows);
        let nob = g.objects().len();
        let cols = self
            .boundary
            .iter()
            .map(|w| {
                let mut v = zeros(nob);
                for &(i, e) in &w.letters {
                    v[i] += int(e as i64);
                }
                v
            })
            .collect();
        let d = AbMap::new(mab, FinAbGroup::free(nob), IntMatrix::from_cols(nob, cols)).ok()?;
        Some(d.kernel().0)
    }
}
