//! Named graphs: `u(n,g)`, `ubar(n,g)`, `cyc_pend(g,[p,...])`, `s1`,
//! `cycle(g)`, `path(n)`, `star(n)`.

use unicyclic::constructors::{
    cycle_graph, make_cycle_with_pendants, make_spider_s1, make_u_ng, make_ubar_ng, path_graph,
    star_graph,
};
use unicyclic::Graph;

fn number(arg: &str, what: &str) -> Result<usize, String> {
    arg.trim()
        .parse()
        .map_err(|_| format!("{what}: expected a non-negative integer, got {:?}", arg.trim()))
}

fn list(arg: &str) -> Result<Vec<usize>, String> {
    let arg = arg.trim();
    let inner = arg
        .strip_prefix('[')
        .and_then(|a| a.strip_suffix(']'))
        .ok_or_else(|| format!("positions: expected [p,...], got {arg:?}"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|p| number(p, "position")).collect()
}

fn exactly<'a>(args: &'a str, name: &str, count: usize) -> Result<Vec<&'a str>, String> {
    let parts: Vec<&str> = args.split(',').collect();
    if parts.len() != count {
        return Err(format!("{name} takes {count} argument(s), got {}", parts.len()));
    }
    Ok(parts)
}

/// `Ok(None)` when `spec` is not builtin syntax (so it names a file).
pub fn parse_builtin(spec: &str) -> Result<Option<Graph>, String> {
    let spec = spec.trim();
    if spec == "s1" {
        return Ok(Some(make_spider_s1()));
    }
    let Some(open) = spec.find('(') else {
        return Ok(None);
    };
    let name = &spec[..open];
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_lowercase() || c == '_') {
        return Ok(None);
    }
    let args = spec[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| format!("{spec:?}: missing closing parenthesis"))?;
    let graph = match name {
        "u" | "ubar" => {
            let a = exactly(args, name, 2)?;
            let (n, g) = (number(a[0], "n")?, number(a[1], "g")?);
            if name == "u" {
                make_u_ng(n, g)
            } else {
                make_ubar_ng(n, g)
            }
        }
        "cyc_pend" => {
            let (g, positions) = args
                .split_once(',')
                .ok_or_else(|| "cyc_pend takes (g, [p,...])".to_string())?;
            make_cycle_with_pendants(number(g, "g")?, &list(positions)?)
        }
        "cycle" => cycle_graph(number(exactly(args, name, 1)?[0], "g")?),
        "path" => path_graph(number(exactly(args, name, 1)?[0], "n")?),
        "star" => star_graph(number(exactly(args, name, 1)?[0], "n")?),
        other => return Err(format!("unknown builtin {other:?}")),
    };
    graph.map(Some).map_err(|e| format!("{spec}: {e}"))
}
