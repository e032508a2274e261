use super::{above, require_word_size, Budget, Visit};
use crate::colouring::{Colour, TwoColouring};
use crate::error::{Error, Result};
use crate::witness::{PatternKind, PatternWitness};

/// Order in which the four pattern shapes are tried.
pub const COLOURING_SEARCH_ORDER: [(PatternKind, Colour); 4] = [
    (PatternKind::ColourClique, Colour::Red),
    (PatternKind::ColourClique, Colour::Blue),
    (PatternKind::ColourTwoCliques, Colour::Red),
    (PatternKind::ColourTwoCliques, Colour::Blue),
];

/// Calls `visit` on every `size`-clique inside `cand` in the colour given by
/// `adj`, in lexicographic order of sorted vertex lists, until it returns
/// `Some`.
fn search_cliques<R>(
    adj: &[u64],
    cand: u64,
    size: usize,
    chosen: &mut Vec<usize>,
    budget: &mut Budget,
    visit: &mut Visit<'_, R>,
) -> Result<Option<R>> {
    budget.tick()?;
    if size == 0 {
        return visit(chosen, budget);
    }
    if (cand.count_ones() as usize) < size {
        return Ok(None);
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let next = cand & adj[v] & above(v);
        if (next.count_ones() as usize) + 1 < size {
            continue;
        }
        chosen.push(v);
        let found = search_cliques(adj, next, size - 1, chosen, budget, visit)?;
        chosen.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn first_clique(
    adj: &[u64],
    cand: u64,
    size: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    search_cliques(adj, cand, size, &mut Vec::new(), budget, &mut |k, _| {
        Ok(Some(k.to_vec()))
    })
}

/// Searches for one pattern shape in one named colour.
///
/// Cliques `K` of order `t` in the named colour are enumerated in
/// lexicographic order. For [`PatternKind::ColourClique`] the completion is
/// the lexicographically first clique of order `t` in the *other* colour
/// among vertices joined to all of `K` in the other colour; for
/// [`PatternKind::ColourTwoCliques`] it is the first named-colour clique
/// among those vertices.
pub fn find_unavoidable_colouring_of(
    c: &TwoColouring,
    t: usize,
    kind: PatternKind,
    colour: Colour,
    budget: &mut Budget,
) -> Result<Option<PatternWitness>> {
    check_sizes(c, t)?;
    if kind == PatternKind::CyclicBlowup {
        return Err(Error::InvalidArgument(
            "cyclic-blowup is a tournament pattern".into(),
        ));
    }
    let n = c.n();
    let named: Vec<u64> = (0..n).map(|u| c.mask(colour, u)).collect();
    let other: Vec<u64> = (0..n).map(|u| c.mask(colour.other(), u)).collect();
    let all = crate::bits::low_mask(n);
    let completion_adj = if kind == PatternKind::ColourClique {
        &other
    } else {
        &named
    };
    search_cliques(&named, all, t, &mut Vec::new(), budget, &mut |k, budget| {
        let outside = k.iter().fold(all, |m, &v| m & other[v]);
        let Some(rest) = first_clique(completion_adj, outside, t, budget)? else {
            return Ok(None);
        };
        Ok(Some(PatternWitness {
            kind,
            colour: Some(colour),
            classes: vec![k.to_vec(), rest],
        }))
    })
}

fn check_sizes(c: &TwoColouring, t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidArgument(
            "pattern order t must be at least 1".into(),
        ));
    }
    if c.n() < 2 * t {
        return Err(Error::Size(format!(
            "an unavoidable {t}-colouring needs {} vertices, the colouring has {}",
            2 * t,
            c.n()
        )));
    }
    require_word_size(c.n())
}

/// Finds an unavoidable `t`-colouring inside `c`, trying the shapes in
/// [`COLOURING_SEARCH_ORDER`].
pub fn find_unavoidable_colouring_with(
    c: &TwoColouring,
    t: usize,
    budget: &mut Budget,
) -> Result<Option<PatternWitness>> {
    check_sizes(c, t)?;
    for (kind, colour) in COLOURING_SEARCH_ORDER {
        if let Some(w) = find_unavoidable_colouring_of(c, t, kind, colour, budget)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

pub fn find_unavoidable_colouring(c: &TwoColouring, t: usize) -> Result<Option<PatternWitness>> {
    find_unavoidable_colouring_with(c, t, &mut Budget::unlimited())
}
