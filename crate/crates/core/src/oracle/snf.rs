//! Smith normal form over the integers by elementary row and column
//! operations, pivoting on the smallest nonzero absolute value.

/// `left * M * right = diag(diagonal)` with unimodular `left` and `right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<u64>,
    pub left: Vec<Vec<i128>>,
    pub right: Vec<Vec<i128>>,
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|&&d| d != 0).count()
    }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

fn row_axpy(mat: &mut [Vec<i128>], dst: usize, src: usize, q: i128) {
    for j in 0..mat[dst].len() {
        let v = mat[src][j];
        mat[dst][j] -= q * v;
    }
}

fn col_axpy(mat: &mut [Vec<i128>], dst: usize, src: usize, q: i128) {
    for row in mat.iter_mut() {
        let v = row[src];
        row[dst] -= q * v;
    }
}

fn swap_cols(mat: &mut [Vec<i128>], a: usize, b: usize) {
    for row in mat.iter_mut() {
        row.swap(a, b);
    }
}

/// Smith decomposition of a nonempty rectangular matrix.
pub fn smith_with_transforms(matrix: &[Vec<i64>]) -> SmithForm {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    assert!(
        rows > 0 && cols > 0,
        "Smith normal form needs a nonempty matrix"
    );
    assert!(matrix.iter().all(|r| r.len() == cols), "ragged matrix");

    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| i128::from(v)).collect())
        .collect();
    let mut left = identity(rows);
    let mut right = identity(cols);
    let mut diagonal = Vec::with_capacity(rows.min(cols));

    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                // Remaining block is zero.
                diagonal.resize(rows.min(cols), 0);
                return SmithForm {
                    diagonal,
                    left,
                    right,
                };
            };
            a.swap(t, pi);
            left.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut right, t, pj);

            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    row_axpy(&mut a, i, t, q);
                    row_axpy(&mut left, i, t, q);
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    col_axpy(&mut a, j, t, q);
                    col_axpy(&mut right, j, t, q);
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }

            // Divisibility chain: fold an offending row into the pivot row.
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match offending {
                Some(i) => {
                    row_axpy(&mut a, t, i, -1);
                    row_axpy(&mut left, t, i, -1);
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for v in a[t].iter_mut().chain(left[t].iter_mut()) {
                *v = -*v;
            }
        }
        diagonal.push(a[t][t] as u64);
    }
    SmithForm {
        diagonal,
        left,
        right,
    }
}

/// Diagonal of the Smith normal form, `d1 | d2 | ...`, all nonnegative.
pub fn smith_normal_form(matrix: &[Vec<i64>]) -> Vec<u64> {
    smith_with_transforms(matrix).diagonal
}
