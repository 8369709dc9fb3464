//! Walks the full pipeline in memory: build the simple 3-Lie algebra,
//! contract it, induce the inner-derivation algebras, contract those, and
//! certify how the two routes relate.

use filippov::{
    certify_central_extension, contract_fa, grading_from_splitting, induce, iw_contract_lie,
    quotient_lie, ww_contract_lie, Matrix, NLieAlgebra, Splitting, Subspace,
};

fn main() -> filippov::Result<()> {
    let a4 = NLieAlgebra::simple(3);
    println!("simple algebra: arity 3, dim 4, FI holds: {}", a4.verify_fi().holds());

    let s = Splitting::new(4, [1, 2])?;
    let a4c = contract_fa(&a4, &s)?;
    println!("contracted entries: {}", a4c.tensor().num_entries());

    let lie_a4 = induce(&a4)?;
    let lie_a4c = induce(&a4c)?;
    println!("dim Lie = {} (uncontracted), {} (contracted)", lie_a4.lie.dim(), lie_a4c.lie.dim());
    println!("contracted fingerprint: {}", lie_a4c.lie.fingerprint());

    // graded contraction of the big algebra, then quotient by the weight-2
    // line: exactly the inner derivations of the contraction
    let grading = grading_from_splitting(&a4, &s, &lie_a4)?;
    let ww = ww_contract_lie(&lie_a4.lie, &grading)?;
    let weight2 = Subspace::from_vectors(6, vec![unit(6, 6)]);
    let quotient = quotient_lie(&ww, &weight2)?;
    println!("quotient equals Lie of contraction: {}", quotient == lie_a4c.lie);

    let report = certify_central_extension(&ww, &weight2, &lie_a4c.lie, &Matrix::identity(5))?;
    print!("{report}");

    // contracting along the so(3) words instead gives the euclidean algebra
    let e3 = iw_contract_lie(&lie_a4.lie, &[3, 5, 6])?;
    println!("euclidean fingerprint: {}", e3.fingerprint());
    Ok(())
}

fn unit(dim: usize, coord: usize) -> Vec<filippov::Rational> {
    let mut v = vec![filippov::Rational::from_integer(0.into()); dim];
    v[coord - 1] = filippov::rat_int(1);
    v
}
