//! UCT Monte-Carlo tree search.
//!
//! Selection maximizes mean value plus `c * sqrt(ln(N_parent) / N_child)`,
//! expansion and rollouts are uniform random, and terminal returns are
//! backpropagated along the path. The returned action is the root child with
//! the highest visit count (ties broken by lowest surface string).
//!
//! Chance events are handled open-loop: each simulation replays the tree
//! path on a copy of the root state reseeded from the solver's own stream,
//! so simulated die rolls vary across simulations without peeking at the
//! real match stream.
//!
//! Imperfect-information games (Kuhn, Liar's Dice, Blind Auction) and
//! simultaneous games are searched by determinization: hidden opponent
//! information is resampled uniformly per determinization, each completion
//! is searched as a perfect-information game (joint turns sequentialized
//! seat 0 then seat 1), and the action with the highest aggregate root
//! visits wins.

use crate::engine::{
    rng, ActionToken, AgentError, AgentPolicy, Decision, GameId, GameState, Player, ToMove,
    TurnActions,
};
use crate::games::Position;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq)]
pub struct MctsConfig {
    pub simulations: u32,
    pub exploration: f64,
    pub max_rollout_depth: u32,
    /// Hidden-information completions sampled per move decision.
    pub determinizations: u32,
}

impl Default for MctsConfig {
    fn default() -> MctsConfig {
        MctsConfig {
            simulations: 1000,
            exploration: std::f64::consts::SQRT_2,
            max_rollout_depth: 200,
            determinizations: 20,
        }
    }
}

/// Search state that sequentializes simultaneous turns: seat 0 commits the
/// first half of a joint action, then seat 1 completes it.
#[derive(Clone)]
struct SearchState {
    state: GameState,
    pending: Option<ActionToken>,
}

impl SearchState {
    fn new(state: GameState) -> SearchState {
        SearchState {
            state,
            pending: None,
        }
    }

    fn acting(&self) -> Option<Player> {
        match self.state.to_move() {
            None => None,
            Some(ToMove::One(p)) => Some(p),
            Some(ToMove::Both) => Some(usize::from(self.pending.is_some())),
        }
    }

    fn legal(&self) -> Vec<ActionToken> {
        let player = self.acting().expect("non-terminal");
        self.state.legal_actions(player).expect("non-terminal")
    }

    fn step(&self, token: ActionToken) -> SearchState {
        match self.state.to_move() {
            Some(ToMove::One(_)) => SearchState::new(
                self.state
                    .apply(&TurnActions::Single(token))
                    .expect("legal by construction"),
            ),
            Some(ToMove::Both) => match &self.pending {
                None => SearchState {
                    state: self.state.clone(),
                    pending: Some(token),
                },
                Some(first) => SearchState::new(
                    self.state
                        .apply(&TurnActions::Joint([first.clone(), token]))
                        .expect("legal by construction"),
                ),
            },
            None => unreachable!("step on terminal"),
        }
    }

    fn terminal(&self) -> bool {
        self.state.terminal()
    }

    /// Returns at terminal or depth cap. Capped states are scored by the
    /// sign of the banked-score difference (Pig is the only unbounded game).
    fn returns(&self, capped: bool) -> [f64; 2] {
        if !capped {
            let o = self.state.outcome().expect("terminal");
            return o.returns;
        }
        if let Position::Pig(s) = self.state.position() {
            return match s.banked(0).cmp(&s.banked(1)) {
                std::cmp::Ordering::Greater => [1.0, 0.0],
                std::cmp::Ordering::Less => [0.0, 1.0],
                std::cmp::Ordering::Equal => [0.5, 0.5],
            };
        }
        [0.0, 0.0]
    }
}

struct Node {
    visits: f64,
    totals: [f64; 2],
    /// Children keyed by action surface; created lazily on expansion.
    children: HashMap<String, usize>,
}

impl Node {
    fn new() -> Node {
        Node {
            visits: 0.0,
            totals: [0.0; 2],
            children: HashMap::new(),
        }
    }
}

struct Tree {
    nodes: Vec<Node>,
}

impl Tree {
    fn new() -> Tree {
        Tree {
            nodes: vec![Node::new()],
        }
    }

    fn uct(&self, parent: usize, child: usize, mover: Player, c: f64) -> f64 {
        let p = &self.nodes[parent];
        let n = &self.nodes[child];
        n.totals[mover] / n.visits + c * (p.visits.ln() / n.visits).sqrt()
    }
}

fn rollout(mut state: SearchState, rng: &mut ChaCha8Rng, max_depth: u32) -> [f64; 2] {
    let mut depth = 0;
    while !state.terminal() {
        if depth >= max_depth {
            return state.returns(true);
        }
        let legal = state.legal();
        let pick = legal[rng.gen_range(0..legal.len())].clone();
        state = state.step(pick);
        depth += 1;
    }
    state.returns(false)
}

/// One full UCT search from `root`; returns root-child visit counts by
/// action surface.
fn search(
    root: &GameState,
    cfg: &MctsConfig,
    rng: &mut ChaCha8Rng,
) -> HashMap<String, (ActionToken, f64)> {
    let mut tree = Tree::new();
    for _ in 0..cfg.simulations {
        // Fresh chance seed per simulation: future rolls vary across
        // simulations instead of replaying the real match stream.
        let mut state = SearchState::new(root.reseeded(rng.gen()));
        let mut node = 0usize;
        let mut path = vec![0usize];

        // Selection / expansion.
        let mut expanded = false;
        while !state.terminal() && !expanded {
            let mover = state.acting().expect("non-terminal");
            let legal = state.legal();
            let fresh: Vec<&ActionToken> = legal
                .iter()
                .filter(|t| !tree.nodes[node].children.contains_key(&t.surface))
                .collect();
            let token = if !fresh.is_empty() {
                // Uniform-random expansion of an untried action.
                let t = fresh[rng.gen_range(0..fresh.len())].clone();
                let child = tree.nodes.len();
                tree.nodes.push(Node::new());
                tree.nodes[node].children.insert(t.surface.clone(), child);
                node = child;
                expanded = true;
                t
            } else {
                let c = cfg.exploration;
                let (child, token) = legal
                    .iter()
                    .map(|t| {
                        let child = tree.nodes[node].children[&t.surface];
                        (child, t, tree.uct(node, child, mover, c))
                    })
                    .max_by(|a, b| a.2.total_cmp(&b.2))
                    .map(|(child, t, _)| (child, t.clone()))
                    .expect("legal actions are non-empty");
                node = child;
                token
            };
            path.push(node);
            state = state.step(token);
        }

        // Rollout from the frontier.
        let returns = rollout(state, rng, cfg.max_rollout_depth);

        // Backpropagation.
        for &n in &path {
            tree.nodes[n].visits += 1.0;
            tree.nodes[n].totals[0] += returns[0];
            tree.nodes[n].totals[1] += returns[1];
        }
    }

    // Root child statistics.
    let mover = SearchState::new(root.clone())
        .acting()
        .expect("non-terminal root");
    let legal = root.legal_actions(mover).expect("non-terminal root");
    let mut out = HashMap::new();
    for token in legal {
        if let Some(&child) = tree.nodes[0].children.get(&token.surface) {
            out.insert(token.surface.clone(), (token, tree.nodes[child].visits));
        }
    }
    out
}

fn has_hidden_info_or_joint(game: GameId) -> bool {
    matches!(
        game,
        GameId::Kuhn | GameId::LiarsDice | GameId::Auction | GameId::PrisonersDilemma
    )
}

/// Resample hidden opponent information uniformly from `player`'s
/// information set.
fn determinize(state: &GameState, player: Player, rng: &mut ChaCha8Rng) -> GameState {
    match state.position() {
        Position::Kuhn(h) => {
            let pos = Position::Kuhn(h.resample_opponent(player, rng));
            state.with_position(pos)
        }
        Position::LiarsDice(t) => {
            let pos = Position::LiarsDice(t.with_die_replaced(1 - player, rng.gen_range(1..=6)));
            state.with_position(pos)
        }
        Position::Auction(s) => {
            let max = state.params().auction_max_valuation;
            let pos =
                Position::Auction(s.with_valuation_replaced(1 - player, rng.gen_range(1..=max)));
            state.with_position(pos)
        }
        _ => state.clone(),
    }
}

/// UCT decision for `player` on `state`, deterministic in `seed`.
pub fn mcts_act(state: &GameState, player: Player, cfg: &MctsConfig, seed: u64) -> ActionToken {
    let mut stream = rng::stream(seed, "mcts_agent");
    let rounds = if has_hidden_info_or_joint(state.game()) {
        cfg.determinizations.max(1)
    } else {
        1
    };
    let mut aggregate: HashMap<String, (ActionToken, f64)> = HashMap::new();
    for _ in 0..rounds {
        let completion = determinize(state, player, &mut stream);
        for (surface, (token, visits)) in search(&completion, cfg, &mut stream) {
            aggregate
                .entry(surface)
                .and_modify(|e| e.1 += visits)
                .or_insert((token, visits));
        }
    }
    aggregate
        .into_iter()
        .max_by(|a, b| {
            // Highest aggregate visits; ties broken by lowest surface string.
            a.1 .1
                .total_cmp(&b.1 .1)
                .then_with(|| b.0.cmp(&a.0))
        })
        .map(|(_, (token, _))| token)
        .expect("non-terminal state has legal actions")
}

/// Agent wrapper drawing one search seed per move from its own stream.
pub struct MctsAgent {
    id: String,
    cfg: MctsConfig,
    stream: ChaCha8Rng,
}

impl MctsAgent {
    pub fn new(id: impl Into<String>, cfg: MctsConfig, seed: u64) -> MctsAgent {
        MctsAgent {
            id: id.into(),
            cfg,
            stream: rng::stream(seed, "mcts_agent"),
        }
    }
}

impl AgentPolicy for MctsAgent {
    fn id(&self) -> &str {
        &self.id
    }

    fn act(&mut self, state: &GameState, player: Player) -> Result<Decision, AgentError> {
        let seed = self.stream.gen();
        Ok(Decision::of(mcts_act(state, player, &self.cfg, seed)))
    }
}
