use std::collections::BTreeMap;

use num_traits::Zero;

use super::linalg::{kernel, solve};
use super::report::{VerificationReport, Witness};
use crate::error::{Error, Result};
use crate::rational::{q, Q};
use crate::traces::{QuadCyclicClass, QuadTraceSeries};
use crate::wordcore::{AssocSeries, Word};

/// Nonzero classes of `tr^quad` in the given arity and degree.
pub fn quad_classes(arity: usize, degree: usize) -> Vec<QuadCyclicClass> {
    let mut out = std::collections::BTreeSet::new();
    let total = arity.pow(degree as u32);
    for mut index in 0..total {
        let mut letters = vec![0; degree];
        for l in letters.iter_mut().rev() {
            *l = index % arity;
            index /= arity;
        }
        if let Some((class, _)) = QuadCyclicClass::canonical(&Word::from_letters(letters)) {
            out.insert(class);
        }
    }
    out.into_iter().collect()
}

fn sum_of_generators(arity: usize, order: usize, letters: &[usize]) -> Result<AssocSeries> {
    let mut s = AssocSeries::zero(arity, order);
    for &l in letters {
        s = s.add(&AssocSeries::generator(arity, l, order)?)?;
    }
    Ok(s)
}

/// `g(images)` for a class of arity `images.len()`, in the arity of the images.
fn substitute_linear(class: &QuadCyclicClass, images: &[AssocSeries]) -> Result<QuadTraceSeries> {
    let order = images[0].order();
    let w = AssocSeries::monomial(images.len(), order, class.representative().clone(), q(1))?;
    Ok(QuadTraceSeries::from_assoc(&w.substitute_letters(images)?))
}

/// `g(x,y) + g(x+y,z) - g(x,y+z) - g(y,z)` for a single class `g`.
fn homo_image(class: &QuadCyclicClass, degree: usize) -> Result<QuadTraceSeries> {
    let g = |a: &[usize], b: &[usize]| -> Result<QuadTraceSeries> {
        substitute_linear(
            class,
            &[sum_of_generators(3, degree, a)?, sum_of_generators(3, degree, b)?],
        )
    };
    g(&[0], &[1])?
        .add(&g(&[0, 1], &[2])?)?
        .sub(&g(&[0], &[1, 2])?)?
        .sub(&g(&[1], &[2])?)
}

fn coordinates(series: &QuadTraceSeries, basis: &[QuadCyclicClass]) -> Vec<Q> {
    basis.iter().map(|c| series.coeff(c)).collect()
}

/// Exact solution space of the homogeneous cocycle equation in degree `n`.
#[derive(Clone, Debug)]
pub struct HomoKernel {
    pub degree: usize,
    pub unknowns: Vec<QuadCyclicClass>,
    pub basis: Vec<QuadTraceSeries>,
    pub report: VerificationReport,
}

/// Kernel of the homogeneous cocycle equation on degree-`n` classes of arity 2, with each kernel
/// vector checked to be `h(x) + h(y) - h(x + y)` for some `h` of arity 1 and
/// to be proportional to `tr_quad((x + y)^n - x^n - y^n)`.
pub fn homo_kernel(n: usize) -> Result<HomoKernel> {
    if n < 2 {
        return Err(Error::Usage("homo_kernel needs degree >= 2".into()));
    }
    let unknowns = quad_classes(2, n);
    let images: Vec<QuadTraceSeries> = unknowns
        .iter()
        .map(|c| homo_image(c, n))
        .collect::<Result<_>>()?;
    let mut rows_index: BTreeMap<QuadCyclicClass, usize> = BTreeMap::new();
    for img in &images {
        for (c, _) in img.terms() {
            let next = rows_index.len();
            rows_index.entry(c.clone()).or_insert(next);
        }
    }
    let mut matrix = vec![vec![Q::zero(); unknowns.len()]; rows_index.len()];
    for (j, img) in images.iter().enumerate() {
        for (c, v) in img.terms() {
            matrix[rows_index[c]][j] = v.clone();
        }
    }
    let vectors = kernel(matrix, unknowns.len());

    let x = AssocSeries::generator(2, 0, n)?;
    let y = AssocSeries::generator(2, 1, n)?;
    let xy = x.add(&y)?;
    let cob_columns: Vec<Vec<Q>> = quad_classes(1, n)
        .iter()
        .map(|h| -> Result<Vec<Q>> {
            let d = substitute_linear(h, std::slice::from_ref(&x))?
                .add(&substitute_linear(h, std::slice::from_ref(&y))?)?
                .sub(&substitute_linear(h, std::slice::from_ref(&xy))?)?;
            Ok(coordinates(&d, &unknowns))
        })
        .collect::<Result<_>>()?;
    let cob_matrix = transpose(&cob_columns, unknowns.len());
    let target = QuadTraceSeries::from_assoc(&xy.pow(n).sub(&x.pow(n))?.sub(&y.pow(n))?);
    let target_matrix = transpose(&[coordinates(&target, &unknowns)], unknowns.len());

    let mut report = VerificationReport::new("homo", n);
    let expected = if n % 2 == 0 { 1 } else { 0 };
    let dim = vectors.len();
    report.record(
        n,
        Some("dimension"),
        (dim != expected).then(|| {
            Witness::new(
                format!("kernel dimension {dim}, expected {expected}"),
                q(dim as i64 - expected as i64),
            )
        }),
    );
    let mut basis = Vec::new();
    for (k, v) in vectors.iter().enumerate() {
        let series = QuadTraceSeries::from_words(
            2,
            n,
            unknowns
                .iter()
                .zip(v)
                .map(|(c, val)| (c.representative().clone(), val.clone())),
        )?;
        let label = format!("vector {k}");
        let nonzero = unknowns.iter().zip(v).find(|(_, val)| !val.is_zero());
        let locate = |msg: &str| {
            let (c, val) = nonzero.expect("kernel vectors are nonzero");
            Witness::new(format!("{msg}, class {}", c.representative().encode()), val.clone())
        };
        report.record(
            n,
            Some(&format!("{label} coboundary")),
            solve(&cob_matrix, cob_columns.len(), v)
                .is_none()
                .then(|| locate("not a coboundary")),
        );
        report.record(
            n,
            Some(&format!("{label} span")),
            solve(&target_matrix, 1, v)
                .is_none()
                .then(|| locate("not proportional to (x+y)^n - x^n - y^n")),
        );
        basis.push(series);
    }
    report.note(format!("degree {n}: {} unknowns, kernel dimension {dim}", unknowns.len()));
    Ok(HomoKernel {
        degree: n,
        unknowns,
        basis,
        report,
    })
}

fn transpose(columns: &[Vec<Q>], rows: usize) -> Vec<Vec<Q>> {
    (0..rows)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect()
}

/// [`homo_kernel`] for every degree `2..=max_degree`, in one report.
pub fn verify_homo(max_degree: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("homo", max_degree);
    for n in 2..=max_degree {
        report.merge(homo_kernel(n)?.report);
    }
    Ok(report)
}
