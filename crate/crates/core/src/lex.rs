//! Depth-first enumeration of set families in lexicographic order of their
//! sorted member lists (a proper prefix sorts before its extensions).
//!
//! A [`PrefixRule`] decides which ascending extensions stay completable.
//! Every accepted prefix must extend to at least one complete set, which
//! keeps the search output-sensitive.

pub(crate) trait PrefixRule {
    fn can_push(&self, e: usize) -> bool;
    fn push(&mut self, e: usize);
    fn pop(&mut self, e: usize);
    fn is_complete(&self) -> bool;
}

/// Emits up to `limit` complete sets drawn from ascending `candidates`.
pub(crate) fn enumerate<R: PrefixRule>(candidates: &[usize], limit: usize, rule: &mut R) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    let mut current: Vec<usize> = Vec::new();
    // next candidate position to try at each depth
    let mut cursor: Vec<usize> = vec![0];

    while let Some(&start) = cursor.last() {
        let next = (start..candidates.len()).find(|&i| rule.can_push(candidates[i]));
        match next {
            Some(i) => {
                let e = candidates[i];
                *cursor.last_mut().expect("cursor non-empty") = i + 1;
                rule.push(e);
                current.push(e);
                if rule.is_complete() {
                    out.push(current.clone());
                    if out.len() == limit {
                        break;
                    }
                }
                cursor.push(i + 1);
            }
            None => {
                cursor.pop();
                if let Some(e) = current.pop() {
                    rule.pop(e);
                }
            }
        }
    }
    out
}
