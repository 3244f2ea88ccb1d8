use super::{KreinTensor, ZeroStatus};

/// Orderings `pi` of the primitive idempotents (with `pi[0] = 0`) under
/// which the scheme is Q-polynomial. `uncertain` holds orderings that pass
/// only if some undecided Krein parameters take the favourable value.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QPolynomialOrderings {
    pub certified: Vec<Vec<usize>>,
    pub uncertain: Vec<Vec<usize>>,
}

impl QPolynomialOrderings {
    pub fn is_q_polynomial(&self) -> Option<bool> {
        if !self.certified.is_empty() {
            Some(true)
        } else if self.uncertain.is_empty() {
            Some(false)
        } else {
            None
        }
    }
}

/// Finds every Q-polynomial ordering by chaining: fixing `e = pi[1]`, each
/// further term must be the only unused index `h` with `q_{e, pi[i]}^h`
/// nonzero. Undecided parameters fork the search both ways. Each complete
/// chain is then checked against the full condition
/// `q_{pi[i] pi[j]}^{e} != 0  iff  |i - j| = 1`.
pub fn q_polynomial_orderings(tensor: &KreinTensor) -> QPolynomialOrderings {
    let size = tensor.size();
    let mut out = QPolynomialOrderings::default();
    if size < 2 {
        return out;
    }
    for e in 1..size {
        let mut order = vec![0, e];
        let mut used = vec![false; size];
        used[0] = true;
        used[e] = true;
        extend(tensor, &mut order, &mut used, true, &mut out);
    }
    out.certified.sort();
    out.uncertain.sort();
    out
}

fn extend(
    tensor: &KreinTensor,
    order: &mut Vec<usize>,
    used: &mut [bool],
    certain: bool,
    out: &mut QPolynomialOrderings,
) {
    let size = tensor.size();
    let e = order[1];
    if order.len() == size {
        match check_full(tensor, order) {
            Some(full_certain) => {
                if certain && full_certain {
                    out.certified.push(order.clone());
                } else {
                    out.uncertain.push(order.clone());
                }
            }
            None => {}
        }
        return;
    }
    let last = *order.last().expect("order starts with two terms");
    let status: Vec<(usize, ZeroStatus)> = (0..size)
        .filter(|&h| !used[h])
        .map(|h| (h, tensor.zero_status(h, e, last)))
        .collect();
    let definite = status.iter().filter(|(_, s)| *s == ZeroStatus::NonZero).count();
    if definite > 1 {
        return;
    }
    for &(h, s) in &status {
        if s == ZeroStatus::Zero || (definite == 1 && s != ZeroStatus::NonZero) {
            continue;
        }
        // h is the next term; every other unused index must vanish.
        let others_unknown = status
            .iter()
            .any(|&(g, t)| g != h && t == ZeroStatus::Unknown);
        let branch_certain = certain && s == ZeroStatus::NonZero && !others_unknown;
        used[h] = true;
        order.push(h);
        extend(tensor, order, used, branch_certain, out);
        order.pop();
        used[h] = false;
    }
}

/// `Some(certain)` if the ordering can satisfy the Q-polynomial condition,
/// `None` if it certainly fails.
pub(crate) fn check_full(tensor: &KreinTensor, order: &[usize]) -> Option<bool> {
    let e = order[1];
    let mut certain = true;
    for i in 0..order.len() {
        for j in 0..order.len() {
            if i == j {
                continue;
            }
            let s = tensor.zero_status(e, order[i], order[j]);
            let want_nonzero = i.abs_diff(j) == 1;
            match (s, want_nonzero) {
                (ZeroStatus::NonZero, true) | (ZeroStatus::Zero, false) => {}
                (ZeroStatus::Unknown, _) => certain = false,
                _ => return None,
            }
        }
    }
    Some(certain)
}
