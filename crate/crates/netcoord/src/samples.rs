//! Small demo networks used by the docs, the tests, and the CLI examples.

use crate::graph::{parse_network, Network};
use crate::Rational;

/// Five strongly interacting agents with out-degrees `(1, 3, 2, 2, 3)`.
///
/// The graph has no self-sustaining split under the zero field, which makes
/// it a convenient demo for indecomposability and absorption behavior.
pub const FIVE_NODE: &str = "\
n 5
e 1 2 1
e 2 3 1
e 2 4 1
e 2 5 1
e 3 1 1
e 3 5 1
e 4 2 1
e 4 5 1
e 5 2 1
e 5 3 1
e 5 4 1
";

/// Seven agents with out-degrees `(3, 1, 3, 3, 3, 3, 3)`.
///
/// Node 2 follows node 1 exclusively, and every later node keeps at least
/// two thirds of its out-weight on earlier nodes, so no split of the agent
/// set is self-sustaining no matter how the field biases node 1. A strong
/// bias on node 1 therefore drags the whole network to that state.
pub const SEVEN_NODE_CHAIN: &str = "\
n 7
e 1 2 1
e 1 3 1
e 1 4 1
e 2 1 1
e 3 1 1
e 3 2 1
e 3 4 1
e 4 2 1
e 4 3 1
e 4 5 1
e 5 3 1
e 5 4 1
e 5 6 1
e 6 4 1
e 6 5 1
e 6 7 1
e 7 5 1
e 7 6 1
e 7 1 1
";

pub fn five_node() -> Network<Rational> {
    parse_network(FIVE_NODE).expect("sample is well-formed")
}

pub fn seven_node_chain() -> Network<Rational> {
    parse_network(SEVEN_NODE_CHAIN).expect("sample is well-formed")
}

/// Two agents pointing at each other with weights `w1` and `w2`.
pub fn two_node(w1: i64, w2: i64) -> Network<Rational> {
    Network::from_edges(
        2,
        [
            (0usize, 1usize, Rational::from_integer(w1.into())),
            (1, 0, Rational::from_integer(w2.into())),
        ],
    )
    .expect("sample is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_node_degrees() {
        let net = seven_node_chain();
        let w: Vec<i64> = (0..7).map(|i| net.out_degree(i).to_integer().try_into().unwrap()).collect();
        assert_eq!(w, vec![3, 1, 3, 3, 3, 3, 3]);
        // every node after the second keeps at least weight 2 on earlier nodes
        for k in 2..7 {
            let early = net.restricted_out_degree_by(k, |j| j < k);
            assert!(early >= Rational::from_integer(2.into()));
        }
    }
}
