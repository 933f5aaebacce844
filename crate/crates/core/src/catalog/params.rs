use std::collections::BTreeMap;

use serde::Serialize;

/// Case parameters, kept as the decimal literals they are stated in.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParamTables {
    /// Area fraction below which the circle bound suffices when `T ≥ 0`.
    /// Key 8 stands for every `n ≥ 8`.
    pub rho1: BTreeMap<u32, &'static str>,
    /// Truncated-area threshold above which the circle bound suffices.
    pub t1: BTreeMap<u32, &'static str>,
    /// Negative truncated-area threshold. Key 8 stands for every `n ≥ 8`.
    pub t0: BTreeMap<u32, &'static str>,
    /// Area fraction below which the circle bound suffices when `T ≤ 0`.
    pub rho2: BTreeMap<u32, &'static str>,
    /// Constant replacements turning the quadrilateral case into the
    /// triangle case, applied simultaneously.
    pub n3_substitutions: Vec<(&'static str, &'static str)>,
    /// Parameters of the quadrilateral case.
    pub n4: SmallPolygonParams,
    /// Named thresholds used by the remaining cases.
    pub thresholds: BTreeMap<&'static str, &'static str>,
}

/// Constants of the quadrilateral case, and of the triangle case obtained
/// from it by substitution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallPolygonParams {
    /// Number of sides.
    pub n: &'static str,
    /// Truncated-area threshold for the positive side.
    pub t_pos: &'static str,
    /// Large-area threshold.
    pub big_area: &'static str,
    /// Number of τ₀ bounding `-T` from above.
    pub neg_mult: &'static str,
    /// Number of τ₀ bounding a reflected area.
    pub reflect_mult: &'static str,
    /// Area fraction separating circle and polygon bounds.
    pub rho_split: &'static str,
    /// Truncated area separating circle and polygon bounds.
    pub t_split: &'static str,
    /// Smallest area fraction allowed by the area hypothesis.
    pub rho_min: &'static str,
}

impl SmallPolygonParams {
    /// Apply `map` to every field at once.
    pub fn substitute(&self, map: &[(&'static str, &'static str)]) -> Self {
        let sub = |v: &'static str| {
            map.iter()
                .find(|(from, _)| *from == v)
                .map_or(v, |(_, to)| *to)
        };
        Self {
            n: sub(self.n),
            t_pos: sub(self.t_pos),
            big_area: sub(self.big_area),
            neg_mult: sub(self.neg_mult),
            reflect_mult: sub(self.reflect_mult),
            rho_split: sub(self.rho_split),
            t_split: sub(self.t_split),
            rho_min: self.rho_min,
        }
    }

    pub fn values(&self) -> Vec<&'static str> {
        vec![
            self.n,
            self.t_pos,
            self.big_area,
            self.neg_mult,
            self.reflect_mult,
            self.rho_split,
            self.t_split,
            self.rho_min,
        ]
    }
}

impl ParamTables {
    pub fn standard() -> Self {
        Self {
            rho1: BTreeMap::from([(5, "0.913"), (6, "0.952"), (7, "0.99"), (8, "1.0")]),
            t1: BTreeMap::from([(5, "0.117"), (6, "0.065"), (7, "0.0134")]),
            t0: BTreeMap::from([(5, "-0.1382"), (6, "-0.0711"), (7, "-0.01362"), (8, "0")]),
            rho2: BTreeMap::from([(5, "0.913"), (6, "0.952"), (7, "0.99")]),
            n3_substitutions: vec![
                ("-0.25", "-0.35"),
                ("3.56", "2.84"),
                ("0.168", "0.22"),
                ("4", "3"),
                ("3", "2"),
                ("0.85", "0.8"),
            ],
            n4: SmallPolygonParams {
                n: "4",
                t_pos: "0.168",
                big_area: "3.56",
                neg_mult: "4",
                reflect_mult: "3",
                rho_split: "0.85",
                t_split: "-0.25",
                rho_min: "0.1",
            },
            thresholds: BTreeMap::from([
                ("large total truncated area", "1.301"),
                ("large area", "3.474"),
                ("pentagon area fraction cap", "0.9957"),
                ("pentagon truncated area upper", "0.117"),
                ("pentagon truncated area lower", "-0.0711"),
                ("long edge perimeter", "3.8"),
                ("long edge area", "0.82"),
                ("long edge radius low", "0.6"),
                ("long edge radius high", "0.7"),
                ("long edge radius start", "0.5"),
                ("long edge radius jet start", "0.5005"),
                ("long edge radius concave from", "1.5"),
                ("polygon perimeter lower bound", "3.65"),
                ("inner area fraction", "0.999"),
                ("inner truncated area lower", "-0.04"),
                ("inner truncated area upper", "0.043"),
                ("convexity half width", "0.005"),
                ("digon area", "2.29"),
                ("simple arc truncated area", "0.271"),
                ("simple arc reflected area", "0.049"),
                ("area threshold cap", "0.1"),
                ("area threshold numerator", "3.75"),
                ("small area gap", "0.4"),
                ("second derivative start", "0.03"),
                ("second derivative end", "2.33"),
                ("merge area floor", "0.000000001"),
                ("concavity margin", "0.000001"),
                ("small area coefficient", "4.0"),
                ("small area denominator", "0.2"),
            ]),
        }
    }

    /// The parameters of the triangle case.
    pub fn n3(&self) -> SmallPolygonParams {
        self.n4.substitute(&self.n3_substitutions)
    }

    /// Every decimal literal a case may use.
    pub fn known_decimals(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for m in [&self.rho1, &self.t1, &self.t0, &self.rho2] {
            out.extend(m.values());
        }
        out.extend(self.n4.values());
        out.extend(self.n3().values());
        out.extend(self.thresholds.values());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_is_simultaneous() {
        let p = ParamTables::standard();
        let n3 = p.n3();
        assert_eq!(n3.n, "3");
        assert_eq!(n3.neg_mult, "3");
        assert_eq!(n3.reflect_mult, "2");
        assert_eq!(n3.t_split, "-0.35");
        assert_eq!(n3.rho_split, "0.8");
        assert_eq!(n3.big_area, "2.84");
        assert_eq!(n3.t_pos, "0.22");
    }
}
