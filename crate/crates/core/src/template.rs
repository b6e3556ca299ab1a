//! Integer-parameter templates shared by the data files: `{expr}` placeholders and
//! boolean predicates, evaluated with evalexpr.

use evalexpr::{
    eval_boolean_with_context, eval_int_with_context, ContextWithMutableVariables,
    HashMapContext, Value,
};

pub type Vars = Vec<(String, i64)>;

fn ctx(vars: &[(String, i64)]) -> HashMapContext {
    let mut c = HashMapContext::new();
    for (k, v) in vars {
        c.set_value(k.clone(), Value::Int(*v)).expect("fresh variable");
    }
    c
}

pub fn eval_bool(expr: &str, vars: &[(String, i64)]) -> Result<bool, String> {
    eval_boolean_with_context(expr, &ctx(vars)).map_err(|e| format!("`{expr}`: {e}"))
}

pub fn eval_int(expr: &str, vars: &[(String, i64)]) -> Result<i64, String> {
    eval_int_with_context(expr, &ctx(vars)).map_err(|e| format!("`{expr}`: {e}"))
}

/// Replace each `{expr}` by its integer value.
pub fn render(template: &str, vars: &[(String, i64)]) -> Result<String, String> {
    let mut out = String::new();
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .ok_or_else(|| format!("unclosed brace in `{template}`"))?
            + open;
        out.push_str(&eval_int(&rest[open + 1..close], vars)?.to_string());
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

/// Variable list from `name=value` pairs.
pub fn vars(pairs: &[(&str, i64)]) -> Vars {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Split a data line into trimmed fields on `" | "`; `None` for blank and `#` lines.
pub fn fields(line: &str) -> Option<Vec<String>> {
    let t = line.trim();
    if t.is_empty() || t.starts_with('#') {
        return None;
    }
    Some(t.split(" | ").map(|s| s.trim().to_string()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_placeholders() {
        let v = vars(&[("n", 5), ("p", 2)]);
        assert_eq!(render("so({p},{n-p})+R", &v).unwrap(), "so(2,3)+R");
        assert!(eval_bool("n >= 4 && p % 2 == 0", &v).unwrap());
        assert!(render("sl{n", &v).is_err());
    }
}
