use crate::ratpoly::RatPoly;
use crate::resultant::rat_gcd;
use crate::{AlgebraError, Result};

/// Yun's squarefree decomposition over Q.
///
/// Returns the nonconstant monic squarefree factors with their multiplicities;
/// the product of factor^multiplicity equals the input up to a nonzero
/// constant. Factors are pairwise coprime. Constant input yields an empty list.
pub fn squarefree_decomposition(f: &RatPoly) -> Result<Vec<(RatPoly, u32)>> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let f = f.monic();
    if f.deg() == 0 {
        return Ok(vec![]);
    }
    let fp = f.derivative();
    let g = rat_gcd(&f, &fp);
    if g.degree() == Some(0) {
        return Ok(vec![(f, 1)]);
    }
    let mut out = Vec::new();
    let mut c = f.div_exact(&g);
    let mut d = fp.div_exact(&g).sub(&c.derivative());
    let mut i = 1u32;
    while c.deg() > 0 {
        let a = rat_gcd(&c, &d);
        if a.deg() > 0 {
            out.push((a.monic(), i));
        }
        c = c.div_exact(&a);
        d = d.div_exact(&a).sub(&c.derivative());
        i += 1;
    }
    Ok(out)
}
