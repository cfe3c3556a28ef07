//! JSON encoding shared by the subcommands.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use hstar_core::{Dosp, HStarVector, PolytopeSpec};

/// Largest integer every JSON consumer holds exactly.
const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

/// A number when it fits in the safe range, otherwise its decimal string.
pub fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if v.abs() <= MAX_SAFE_INTEGER => json!(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn spec_value(spec: &PolytopeSpec) -> Value {
    json!({ "r": spec.r(), "k": spec.k(), "n": spec.n() })
}

pub fn hstar_value(h: &HStarVector) -> Value {
    Value::Array(h.entries().iter().map(int_value).collect())
}

pub fn dosp_value(p: &Dosp) -> Value {
    json!({
        "text": p.to_string(),
        "blocks": p.blocks(),
        "gaps": p.gaps(),
        "d": p.winding_number(),
        "winding_vector": p.winding_vector().entries(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_integers_become_strings() {
        assert_eq!(
            int_value(&BigInt::from(MAX_SAFE_INTEGER)),
            json!(MAX_SAFE_INTEGER)
        );
        assert_eq!(
            int_value(&BigInt::from(MAX_SAFE_INTEGER + 1)),
            json!("9007199254740992")
        );
        assert_eq!(int_value(&BigInt::from(-5)), json!(-5));
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int_value(&huge), json!("123456789012345678901234567890"));
    }

    #[test]
    fn dosp_record_fields() {
        let p = Dosp::parse("({1,2,7}_2,{3,5}_3,{4,6}_1)", 6, 7).unwrap();
        let v = dosp_value(&p);
        assert_eq!(v["d"], json!(2));
        assert_eq!(v["winding_vector"], json!([0, 2, 3, 3, 3, 1, 0]));
        assert_eq!(v["blocks"], json!([[1, 2, 7], [3, 5], [4, 6]]));
        assert_eq!(v["gaps"], json!([2, 3, 1]));
        assert_eq!(v["text"], json!("({1,2,7}_2,{3,5}_3,{4,6}_1)"));
    }
}
