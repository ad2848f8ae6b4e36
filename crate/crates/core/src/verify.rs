//! Identity battery run by `verify` and on every census arrangement.

use serde::Serialize;

use crate::arrangement::CombinatorialSummary;
use crate::exact::RootOfUnity;
use crate::invariants::{
    betti1_from_directions, betti1_from_vertices, betti1_general_fiber, euler_characteristic_of_union, mu_arrangement,
};
use crate::monodromy::{
    charpoly_infinity, charpoly_zero_closed, charpoly_zero_from_zeta, charpoly_zero_unweighted, zeta_at_zero,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub all_passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check { name, passed, detail }
}

/// Runs every cross-identity on `cs`. Checks that only make sense for
/// reduced arrangements are run on `cs` with all weights set to 1.
pub fn verify_summary(cs: &CombinatorialSummary) -> VerifyReport {
    let mut checks = Vec::new();
    let unit = cs.reweighted(&vec![1; cs.d]);

    let (by_line, by_vertex, by_histogram) = cs.incidence_counts();
    checks.push(check(
        "incidenceDoubleCount",
        by_line == by_vertex && by_vertex == by_histogram,
        format!("sum v_j = {by_line}, sum m_v = {by_vertex}, sum m n_m = {by_histogram}"),
    ));

    checks.push(check("directionPartition", cs.is_partition() && cs.p() >= 2, format!("p = {}", cs.p())));

    let zero = charpoly_zero_closed(cs);
    let infinity = charpoly_infinity(cs);
    let b1 = betti1_general_fiber(cs);
    checks.push(check(
        "degreeIdentity",
        zero.degree() == b1 && infinity.degree() == b1,
        format!("deg zero = {}, deg infinity = {}, b1 = {b1}", zero.degree(), infinity.degree()),
    ));

    checks.push(check(
        "nonnegativeExponents",
        !zero.has_negative_exponent() && !infinity.has_negative_exponent(),
        String::new(),
    ));

    let ones = infinity.root_multiplicity(&RootOfUnity::one());
    checks.push(check(
        "rootOneMultiplicityAtInfinity",
        ones == cs.d as i64 - 1,
        format!("multiplicity {ones}, d - 1 = {}", cs.d as i64 - 1),
    ));

    let (passed, detail) = match charpoly_zero_from_zeta(&zeta_at_zero(cs)) {
        Ok(from_zeta) => (from_zeta.to_cyclotomic() == zero.to_cyclotomic(), String::new()),
        Err(e) => (false, e.to_string()),
    };
    checks.push(check("zetaAgreement", passed, detail));

    checks.push(check(
        "unweightedSpecialization",
        charpoly_zero_unweighted(&unit).to_cyclotomic() == charpoly_zero_closed(&unit).to_cyclotomic(),
        String::new(),
    ));

    let (lhs, rhs) = (betti1_from_vertices(cs), betti1_from_directions(cs));
    checks.push(check("numbersIdentity", lhs == rhs, format!("{lhs} = {rhs}")));

    let reduced_b1 = betti1_general_fiber(&unit);
    checks.push(check(
        "bettiFormulasAgree",
        reduced_b1 == lhs,
        format!("direction formula {reduced_b1}, vertex formula {lhs}"),
    ));

    let mu = mu_arrangement(cs);
    let chi_x = euler_characteristic_of_union(cs);
    checks.push(check("eulerCharacteristic", mu == 1 - chi_x && mu >= 0, format!("mu = {mu}, chi(X) = {chi_x}")));

    VerifyReport { all_passed: checks.iter().all(|c| c.passed), checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{compute_combinatorics, Line, WeightedArrangement};

    fn summary(spec: &[(i64, i64, i64)], weights: &[u64]) -> CombinatorialSummary {
        let lines = spec.iter().map(|&(a, b, c)| Line::from_ints(a, b, c).unwrap()).collect();
        compute_combinatorics(&WeightedArrangement::new(lines, weights.to_vec()).unwrap())
    }

    #[test]
    fn fixtures_pass() {
        let w = summary(&[(1, 0, 0), (0, 1, 0), (1, 1, -1)], &[1, 1, 2]);
        let report = verify_summary(&w);
        assert!(report.all_passed, "{:?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.checks.len(), 10);
    }

    #[test]
    fn corrupted_summary_fails() {
        let mut cs = summary(&[(1, 0, 0), (0, 1, 0), (1, 1, -1)], &[1, 1, 1]);
        cs.line_vertex_counts[0] += 1;
        let report = verify_summary(&cs);
        assert!(!report.all_passed);
        let failed: Vec<_> = report.failures().map(|c| c.name).collect();
        assert!(failed.contains(&"incidenceDoubleCount"));
    }

    #[test]
    fn corrupted_histogram_breaks_numbers_identity() {
        let mut cs = summary(&[(1, 0, 0), (0, 1, 0), (1, 1, -1)], &[1, 1, 1]);
        cs.histogram.insert(3, 1);
        let failed: Vec<_> = verify_summary(&cs).failures().map(|c| c.name).collect();
        assert!(failed.contains(&"numbersIdentity"));
    }
}
