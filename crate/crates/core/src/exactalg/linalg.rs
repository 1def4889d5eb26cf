use super::Rat;

/// Rank of a dense rational matrix by row reduction. Rows may be empty.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        let pivot: Vec<Rat> = m[r].iter().map(|x| x * &inv).collect();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot).skip(c) {
                *x -= &(&f * y);
            }
        }
        m[r] = pivot;
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}
