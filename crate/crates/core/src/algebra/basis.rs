use num_traits::Zero;

use super::{AlgebraError, LieAlgebra};
use crate::exact::{Rational, RationalMatrix};

/// New generators as rational combinations of the old ones: row `i` of the
/// matrix holds the coordinates of new generator `names[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    matrix: RationalMatrix,
    names: Vec<String>,
}

impl BasisChange {
    pub fn new(matrix: RationalMatrix, names: Vec<String>) -> Self {
        BasisChange { matrix, names }
    }

    pub fn identity(algebra: &LieAlgebra) -> Self {
        BasisChange {
            matrix: RationalMatrix::identity(algebra.dim()),
            names: algebra.generators().to_vec(),
        }
    }

    /// Replaces generator `old` by `new = Σ c·g`, keeping the others.
    pub fn replace(
        algebra: &LieAlgebra,
        old: &str,
        new: &str,
        combination: &[(&str, Rational)],
    ) -> Result<Self, AlgebraError> {
        let row = algebra.require(old)?;
        let mut bc = BasisChange::identity(algebra);
        bc.matrix
            .set(row, row, Rational::zero())
            .expect("square matrix");
        for (g, c) in combination {
            let col = algebra.require(g)?;
            let v = bc.matrix.get(row, col) + c;
            bc.matrix.set(row, col, v).expect("square matrix");
        }
        bc.names[row] = new.to_string();
        Ok(bc)
    }

    /// Same basis with the generators renamed through `f`.
    pub fn renamed(&self, f: impl Fn(&str) -> String) -> Self {
        BasisChange {
            matrix: self.matrix.clone(),
            names: self.names.iter().map(|n| f(n)).collect(),
        }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == RationalMatrix::identity(self.matrix.rows())
    }
}
