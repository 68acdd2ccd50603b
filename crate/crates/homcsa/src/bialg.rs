//! Bialgebra structures on a primal/dual pair: comultiplications, the
//! twisted 1-cocycle conditions (in abstract and structure-constant form),
//! the standard double with its invariant pairing, and the four-way
//! equivalence report.

use crate::algebra::HomAlgebra;
use crate::linalg::{int, vsub, BilinearTensor, LinearMap, Scalar, ShapeError};
use crate::matched::MatchedPairCsa;
use crate::report::{AxiomReport, CheckReport};
use num_traits::Zero;

/// An algebra together with a candidate product on its dual space.
///
/// The dual product is stored as a tensor `f` with `f[i][j][k]` the
/// coefficient of the k-th dual basis vector in the product of the i-th and
/// j-th. The dual twist is always the transpose of the primal twist and is
/// never stored separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedAlgebras {
    primal: HomAlgebra,
    dual: HomAlgebra,
}

/// Which of the two comultiplications a cocycle check targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleSide {
    /// The comultiplication read off the dual product, as a map on the
    /// primal space.
    Gamma,
    /// The comultiplication read off the primal product, as a map on the
    /// dual space.
    Beta,
}

/// The two comultiplication matrices of a paired instance, each mapping an
/// n-dimensional space into its tensor square (rows indexed left-major).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comultiplication {
    pub gamma: LinearMap,
    pub beta: LinearMap,
}

/// The four compatibility conditions, each evaluated independently, plus
/// standing-hypothesis annotations. The verdicts are not collapsed into one
/// because they can genuinely differ: the bracket-level condition only sees
/// the antisymmetric parts of the two products and can hold strictly more
/// often than the other three.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// The double algebra is center-symmetric and the standard pairing is
    /// invariant on it.
    pub manin_triple: bool,
    /// The standard actions make the pair a matched pair.
    pub matched_pair: bool,
    /// The induced commutator pair is a matched pair of hom-Lie algebras.
    pub lie_matched_pair: bool,
    /// Both comultiplications are twisted 1-cocycles.
    pub bialgebra: bool,
    /// Annotation: the primal algebra passes its own axioms.
    pub primal_center_symmetric: bool,
    /// Annotation: the dual algebra passes its own axioms.
    pub dual_center_symmetric: bool,
    /// Annotation: the twist squares to the identity, the standing
    /// hypothesis for comparing the four conditions at all.
    pub twist_involutive: bool,
}

impl EquivalenceReport {
    pub fn conditions(&self) -> [bool; 4] {
        [
            self.manin_triple,
            self.matched_pair,
            self.lie_matched_pair,
            self.bialgebra,
        ]
    }

    /// All four conditions carry the same verdict.
    pub fn consistent(&self) -> bool {
        let [a, b, c, d] = self.conditions();
        a == b && b == c && c == d
    }

    pub fn all_hold(&self) -> bool {
        self.conditions() == [true; 4]
    }
}

/// Evaluates the pairing `(x+a, y+b) -> <x,b> + <y,a>` on two vectors over
/// the double space, blocks ordered (algebra, dual).
pub fn standard_pairing(u: &[Scalar], v: &[Scalar]) -> Result<Scalar, ShapeError> {
    if u.len() != v.len() || u.len() % 2 != 0 {
        return Err(ShapeError::DimMismatch);
    }
    let n = u.len() / 2;
    let mut out = Scalar::zero();
    for i in 0..n {
        out += &u[i] * &v[n + i];
        out += &v[i] * &u[n + i];
    }
    Ok(out)
}

/// Shared cocycle engine: checks that `comul` is a twisted 1-cocycle on the
/// commutator bracket of `alg`, with values in the tensor square acted on by
/// `rho(x) = -(ad_x (x) twist + twist (x) ad_x)`.
fn cocycle_report(axiom: &str, alg: &HomAlgebra, comul: &LinearMap) -> AxiomReport {
    let n = alg.dim();
    let bracket = alg.commutator_algebra();
    let ad = alg.ad_rep();
    let alpha = alg.twist();
    let rho: Vec<LinearMap> = (0..n)
        .map(|i| {
            ad.mat(i)
                .kron(alpha)
                .add(&alpha.kron(ad.mat(i)))
                .expect("tensor squares share dimensions")
                .neg()
        })
        .collect();
    let mut report = AxiomReport::new(axiom);
    // Both sides are antisymmetric in (i, j), so ordered pairs suffice.
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = comul
                .apply(&alpha.apply(&bracket.basis_product(i, j)).expect("shapes fixed"))
                .expect("shapes fixed");
            let rhs = vsub(
                &rho[i].apply(&comul.column(j)).expect("shapes fixed"),
                &rho[j].apply(&comul.column(i)).expect("shapes fixed"),
            );
            report.expect_eq(&[i, j], lhs, rhs);
        }
    }
    report
}

/// Shared structure-constant cocycle engine, the independent second path:
/// for every free tuple (i, j, m, p) the displayed coefficient identity must
/// balance. `c` supplies the bracket source, `f` the comultiplication, and
/// `twist` the twist of the bracket-source algebra; `d(k, l)` below is the
/// coefficient of basis vector l in the twist of basis vector k.
fn cocycle_coordinates_report(
    axiom: &str,
    c: &BilinearTensor,
    f: &BilinearTensor,
    twist: &LinearMap,
) -> AxiomReport {
    let n = c.dim_left();
    let d = |k: usize, l: usize| twist.entry(l, k);
    let bkt = |x: usize, y: usize, k: usize| c.entry(x, y, k) - c.entry(y, x, k);
    let mut report = AxiomReport::new(axiom);
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                for p in 0..n {
                    let mut lhs = Scalar::zero();
                    let mut rhs = Scalar::zero();
                    for k in 0..n {
                        for l in 0..n {
                            lhs += f.entry(m, p, l) * bkt(i, j, k) * d(k, l);
                            rhs += (f.entry(k, l, i) * bkt(j, k, m)
                                - f.entry(k, l, j) * bkt(i, k, m))
                                * d(l, p);
                            rhs += (f.entry(l, k, i) * bkt(j, k, p)
                                - f.entry(l, k, j) * bkt(i, k, p))
                                * d(l, m);
                        }
                    }
                    report.expect_eq(&[i, j, m, p], vec![lhs], vec![rhs]);
                }
            }
        }
    }
    report
}

/// Flattens a product tensor into the matrix of the comultiplication it
/// defines on the dual side: column k lists the coefficients of the tensor
/// square basis (left-major) in the image of basis vector k.
fn comul_matrix(t: &BilinearTensor) -> LinearMap {
    let n = t.dim_left();
    LinearMap::from_fn(n * n, n, |row, k| t.entry(row / n, row % n, k).clone())
}

impl PairedAlgebras {
    /// Pairs `primal` with a product on its dual space. The dual twist is
    /// fixed to the transpose of the primal twist.
    pub fn new(primal: HomAlgebra, dual_mul: BilinearTensor) -> Result<Self, ShapeError> {
        let dual = HomAlgebra::new(dual_mul, primal.twist().dual())?;
        if dual.dim() != primal.dim() {
            return Err(ShapeError::DimMismatch);
        }
        Ok(PairedAlgebras { primal, dual })
    }

    pub fn primal(&self) -> &HomAlgebra {
        &self.primal
    }

    /// The dual-space algebra: the supplied product with the transposed
    /// twist.
    pub fn dual(&self) -> &HomAlgebra {
        &self.dual
    }

    pub fn dim(&self) -> usize {
        self.primal.dim()
    }

    /// Both comultiplication matrices: `gamma` from the dual product, `beta`
    /// from the primal product.
    pub fn comultiplication(&self) -> Comultiplication {
        Comultiplication {
            gamma: comul_matrix(self.dual.mul()),
            beta: comul_matrix(self.primal.mul()),
        }
    }

    /// Twisted 1-cocycle condition for one comultiplication, stated through
    /// operators on the tensor square.
    pub fn check_cocycle(&self, side: CocycleSide) -> AxiomReport {
        let comul = self.comultiplication();
        match side {
            CocycleSide::Gamma => cocycle_report("cocycle-gamma", &self.primal, &comul.gamma),
            CocycleSide::Beta => cocycle_report("cocycle-beta", &self.dual, &comul.beta),
        }
    }

    /// The same condition evaluated through the explicit structure-constant
    /// identities, an independent computation path used to cross-validate
    /// `check_cocycle`.
    pub fn check_cocycle_coordinates(&self, side: CocycleSide) -> AxiomReport {
        match side {
            CocycleSide::Gamma => cocycle_coordinates_report(
                "cocycle-gamma-coordinates",
                self.primal.mul(),
                self.dual.mul(),
                self.primal.twist(),
            ),
            CocycleSide::Beta => cocycle_coordinates_report(
                "cocycle-beta-coordinates",
                self.dual.mul(),
                self.primal.mul(),
                self.dual.twist(),
            ),
        }
    }

    /// Full bialgebra check: both algebras center-symmetric and both
    /// comultiplications twisted 1-cocycles, each reported independently.
    pub fn check_bialgebra(&self) -> CheckReport {
        let mut out = CheckReport::new();
        out.merge_prefixed("primal-", self.primal.check_center_symmetric());
        out.merge_prefixed("dual-", self.dual.check_center_symmetric());
        out.push(self.check_cocycle(CocycleSide::Gamma));
        out.push(self.check_cocycle(CocycleSide::Beta));
        out
    }

    /// The standard matched-pair candidate: each algebra acts on the other's
    /// space by the duals of its own multiplication operators, left and
    /// right sides crossing over.
    pub fn standard_matched_pair(&self) -> MatchedPairCsa {
        MatchedPairCsa::new(
            self.primal.clone(),
            self.dual.clone(),
            self.primal.right_rep().dual(),
            self.primal.left_rep().dual(),
            self.dual.right_rep().dual(),
            self.dual.left_rep().dual(),
        )
        .expect("dimensions agree by construction")
    }

    /// The double: bicross product of the standard matched pair on
    /// `primal (+) dual`, twist block-diagonal.
    pub fn standard_manin_algebra(&self) -> HomAlgebra {
        self.standard_matched_pair().bicross_product()
    }

    /// Invariance of the standard pairing under the double's product and
    /// twist, plus isotropy of both diagonal blocks.
    pub fn check_manin_invariance(&self) -> CheckReport {
        let n = self.dim();
        let double = self.standard_manin_algebra();
        let dim = 2 * n;
        let gram = LinearMap::from_fn(dim, dim, |i, j| {
            if i + n == j || j + n == i {
                int(1)
            } else {
                Scalar::zero()
            }
        });

        let mut out = CheckReport::new();

        // (u * v, w) = (u, v * w) on basis triples; with Gram matrix G and
        // product vectors this is (G p_uv)[w] = (G p_vw)[u].
        let mut invariance = AxiomReport::new("pairing-invariance");
        for i in 0..dim {
            for j in 0..dim {
                let left = gram
                    .apply(&double.basis_product(i, j))
                    .expect("shapes fixed");
                for k in 0..dim {
                    let right = gram
                        .apply(&double.basis_product(j, k))
                        .expect("shapes fixed");
                    invariance.expect_eq(&[i, j, k], vec![left[k].clone()], vec![right[i].clone()]);
                }
            }
        }
        out.push(invariance);

        // (twist(u), v) = (u, twist(v)): as matrices, twist^T G = G twist.
        let mut twist_compat = AxiomReport::new("pairing-twist");
        let lhs = double.twist().dual().compose(&gram).expect("shapes fixed");
        let rhs = gram.compose(double.twist()).expect("shapes fixed");
        twist_compat.expect_map_eq(&[], &lhs, &rhs);
        out.push(twist_compat);

        let mut iso_primal = AxiomReport::new("isotropy-primal");
        let mut iso_dual = AxiomReport::new("isotropy-dual");
        for i in 0..n {
            for j in 0..n {
                iso_primal.expect_eq(&[i, j], vec![gram.entry(i, j).clone()], vec![Scalar::zero()]);
                iso_dual.expect_eq(
                    &[i, j],
                    vec![gram.entry(n + i, n + j).clone()],
                    vec![Scalar::zero()],
                );
            }
        }
        out.push(iso_primal);
        out.push(iso_dual);
        out
    }

    /// Evaluates the four compatibility conditions independently, plus the
    /// hypothesis annotations.
    pub fn equivalence_report(&self) -> EquivalenceReport {
        let pair = self.standard_matched_pair();
        let double = self.standard_manin_algebra();
        EquivalenceReport {
            manin_triple: double.check_center_symmetric().passed()
                && self.check_manin_invariance().passed(),
            matched_pair: pair.check().passed(),
            lie_matched_pair: pair.induced_lie_pair().check().passed(),
            bialgebra: self.check_bialgebra().passed(),
            primal_center_symmetric: self.primal.check_center_symmetric().passed(),
            dual_center_symmetric: self.dual.check_center_symmetric().passed(),
            twist_involutive: self.primal.is_twist_involutive(),
        }
    }
}

/// Checks that `f` is a homomorphism of paired instances: it intertwines the
/// comultiplications and twists, and its dual intertwines the transposed
/// twists and the opposite comultiplications. All four conditions are
/// checked exactly as stated, one column per violation record.
pub fn check_bialgebra_homomorphism(
    f: &LinearMap,
    source: &PairedAlgebras,
    target: &PairedAlgebras,
) -> Result<CheckReport, ShapeError> {
    let (n1, n2) = (source.dim(), target.dim());
    if f.rows() != n2 || f.cols() != n1 {
        return Err(ShapeError::DimMismatch);
    }
    let src = source.comultiplication();
    let tgt = target.comultiplication();
    let f_dual = f.dual();
    let mut out = CheckReport::new();

    let mut comul = AxiomReport::new("comul-intertwined");
    let lhs = f.kron(f).compose(&src.gamma).expect("shapes fixed");
    let rhs = tgt.gamma.compose(f).expect("shapes fixed");
    for k in 0..n1 {
        comul.expect_eq(&[k], lhs.column(k), rhs.column(k));
    }
    out.push(comul);

    let mut twist = AxiomReport::new("twist-intertwined");
    let lhs = f.compose(source.primal().twist()).expect("shapes fixed");
    let rhs = target.primal().twist().compose(f).expect("shapes fixed");
    for k in 0..n1 {
        twist.expect_eq(&[k], lhs.column(k), rhs.column(k));
    }
    out.push(twist);

    let mut dual_twist = AxiomReport::new("dual-twist-intertwined");
    let lhs = target.dual().twist().compose(f).expect("shapes fixed");
    let rhs = f.compose(source.dual().twist()).expect("shapes fixed");
    for k in 0..n1 {
        dual_twist.expect_eq(&[k], lhs.column(k), rhs.column(k));
    }
    out.push(dual_twist);

    let mut dual_comul = AxiomReport::new("dual-comul-intertwined");
    let lhs = f_dual.kron(&f_dual).compose(&tgt.beta).expect("shapes fixed");
    let rhs = src.beta.compose(&f_dual).expect("shapes fixed");
    for k in 0..n2 {
        dual_comul.expect_eq(&[k], lhs.column(k), rhs.column(k));
    }
    out.push(dual_comul);

    Ok(out)
}
