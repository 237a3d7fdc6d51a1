"""
module barground.verification.cases

Contains the gradient check cases: every operation in functions_by_name and
every differentiable component of the grounding model (attention, alignment
score, cross-gating, GRU step, the phi fusion, the actor and critic heads and
the training losses). Shapes are kept small so the full registry runs in
seconds.
"""

from typing import Callable, Dict, List, Tuple

import numpy as np

from ..autodiff import Embedding, GRUCell, Linear, Tensor, no_grad, ops, train_mode
from ..evaluator import AlignmentEvaluator, AlignmentScores
from ..extractor import Boundary
from ..planner import (
    Action,
    ActionKind,
    ActionPlanner,
    PlannerState,
    PolicyOutput,
    Trajectory,
    Transition,
)
from ..trainer.losses import a2c_loss, inter_loss, intra_loss
from .dataclasses import GradcheckCase

FEATURE_DIM: int = 5
HIDDEN_SIZE: int = 4
CLIP_COUNT: int = 6

Built = Tuple[Callable[[], Tensor], List[Tensor]]


def _leaf(rng: np.random.Generator, *shape: int) -> Tensor:
    return Tensor(rng.normal(size=shape))


def _away_from_zero(rng: np.random.Generator, *shape: int) -> Tensor:
    # keeps relu inputs clear of the kink
    values: np.ndarray = rng.normal(size=shape)
    return Tensor(np.sign(values) * np.maximum(np.abs(values), 0.1))


def _projected(output_fn: Callable[[], Tensor], rng: np.random.Generator) -> Callable[[], Tensor]:
    """
    Reduces an output of any shape to a scalar through a fixed random projection
    """

    with no_grad():
        shape: Tuple[int, ...] = output_fn().shape

    weights: Tensor = Tensor(rng.normal(size=shape))
    return lambda: ops.sum_all(output_fn() * weights)


def _unary(op: Callable[[Tensor], Tensor], *shape: int) -> Callable[[np.random.Generator], Built]:
    def build(rng: np.random.Generator) -> Built:
        value: Tensor = _leaf(rng, *shape)
        return _projected(lambda: op(value), rng), [value]

    return build


def _binary(
    op: Callable[[Tensor, Tensor], Tensor],
    left_shape: Tuple[int, ...],
    right_shape: Tuple[int, ...],
) -> Callable[[np.random.Generator], Built]:
    def build(rng: np.random.Generator) -> Built:
        left: Tensor = _leaf(rng, *left_shape)
        right: Tensor = _leaf(rng, *right_shape)
        return _projected(lambda: op(left, right), rng), [left, right]

    return build


def _build_relu(rng: np.random.Generator) -> Built:
    value: Tensor = _away_from_zero(rng, 6)
    return _projected(lambda: ops.relu(value), rng), [value]


def _build_dropout(rng: np.random.Generator) -> Built:
    value: Tensor = _leaf(rng, 3, 4)
    mask_seed: int = int(rng.integers(1 << 31))

    def masked() -> Tensor:
        # the same mask on every evaluation
        with train_mode():
            return ops.dropout(value, 0.5, np.random.default_rng(mask_seed))

    return _projected(masked, rng), [value]


def _build_concat(rng: np.random.Generator) -> Built:
    first: Tensor = _leaf(rng, 3)
    second: Tensor = _leaf(rng, 2)
    return _projected(lambda: ops.concat([first, second]), rng), [first, second]


def _build_stack(rng: np.random.Generator) -> Built:
    first: Tensor = _leaf(rng, 3)
    second: Tensor = _leaf(rng, 3)
    return _projected(lambda: ops.stack([first, second]), rng), [first, second]


def _build_linear(rng: np.random.Generator) -> Built:
    layer: Linear = Linear(3, 4, rng)
    value: Tensor = _leaf(rng, 2, 3)
    return _projected(lambda: layer(value), rng), [value, *layer.parameters()]


def _build_embedding(rng: np.random.Generator) -> Built:
    layer: Embedding = Embedding(5, 3, rng)
    tokens: List[int] = [4, 1, 4]
    return (
        _projected(lambda: ops.stack([layer(token) for token in tokens]), rng),
        layer.parameters(),
    )


def _build_gru_step(rng: np.random.Generator) -> Built:
    cell: GRUCell = GRUCell(3, HIDDEN_SIZE, rng)
    value: Tensor = _leaf(rng, 3)
    hidden: Tensor = _leaf(rng, HIDDEN_SIZE)
    return _projected(lambda: cell(value, hidden), rng), [value, hidden, *cell.parameters()]


def _evaluator(rng: np.random.Generator) -> AlignmentEvaluator:
    # dropout is inactive outside train_mode()
    evaluator: AlignmentEvaluator = AlignmentEvaluator(FEATURE_DIM, HIDDEN_SIZE, 0.5, rng)
    evaluator.assign_names("evaluator")
    return evaluator


def _build_attention(rng: np.random.Generator) -> Built:
    evaluator: AlignmentEvaluator = _evaluator(rng)
    segment: Tensor = _leaf(rng, CLIP_COUNT, FEATURE_DIM)
    query: Tensor = _leaf(rng, HIDDEN_SIZE)
    weights_loss = _projected(lambda: evaluator.attend(segment, query).weights, rng)
    attended_loss = _projected(lambda: evaluator.attend(segment, query).attended, rng)
    return (
        lambda: weights_loss() + attended_loss(),
        [segment, query, *evaluator.parameters()],
    )


def _build_score(rng: np.random.Generator) -> Built:
    evaluator: AlignmentEvaluator = _evaluator(rng)
    segment: Tensor = _leaf(rng, CLIP_COUNT, FEATURE_DIM)
    query: Tensor = _leaf(rng, HIDDEN_SIZE)
    return lambda: evaluator.score(segment, query), [segment, query, *evaluator.parameters()]


def _planner(rng: np.random.Generator) -> ActionPlanner:
    planner: ActionPlanner = ActionPlanner(FEATURE_DIM, HIDDEN_SIZE, rng)
    planner.assign_names("planner")
    return planner


def _build_cross_gate(rng: np.random.Generator) -> Built:
    planner: ActionPlanner = _planner(rng)
    segment_feature: Tensor = _leaf(rng, FEATURE_DIM)
    query: Tensor = _leaf(rng, HIDDEN_SIZE)
    segment_loss = _projected(lambda: planner.cross_gate(segment_feature, query)[0], rng)
    query_loss = _projected(lambda: planner.cross_gate(segment_feature, query)[1], rng)
    return (
        lambda: segment_loss() + query_loss(),
        [
            segment_feature,
            query,
            *planner.gate_query.parameters(),
            *planner.gate_segment.parameters(),
        ],
    )


def _build_phi(rng: np.random.Generator) -> Built:
    planner: ActionPlanner = _planner(rng)
    inputs: List[Tensor] = [
        _leaf(rng, HIDDEN_SIZE),
        _leaf(rng, FEATURE_DIM),
        _leaf(rng, FEATURE_DIM),
        _leaf(rng, FEATURE_DIM),
        _leaf(rng, FEATURE_DIM),
        Tensor(rng.uniform(size=2)),
    ]
    hidden: Tensor = _leaf(rng, HIDDEN_SIZE)

    def state_hidden() -> Tensor:
        return planner.build_state(*inputs, hidden, step=1).hidden

    return (
        _projected(state_hidden, rng),
        [
            *inputs,
            hidden,
            *planner.phi_input.parameters(),
            *planner.phi_output.parameters(),
            *planner.memory.parameters(),
        ],
    )


def _build_actor_critic(rng: np.random.Generator) -> Built:
    planner: ActionPlanner = _planner(rng)
    hidden: Tensor = _leaf(rng, HIDDEN_SIZE)
    actions: np.ndarray = rng.normal(size=4)

    def heads() -> Tensor:
        output: PolicyOutput = planner.policy_value(
            PlannerState(activation=hidden, hidden=hidden, step=1)
        )
        return ops.sum_all(output.log_probs * Tensor(actions)) + output.value * 0.7

    return heads, [hidden, *planner.actor.parameters(), *planner.critic.parameters()]


def _build_a2c_loss(rng: np.random.Generator) -> Built:
    # advantages are constants in the actor term, so only the actor head is
    # perturbed; the critic head is covered by actor_critic_heads
    planner: ActionPlanner = _planner(rng)
    steps: int = 4
    hiddens: List[Tensor] = [_leaf(rng, HIDDEN_SIZE) for _ in range(steps)]
    kinds: List[ActionKind] = [ActionKind(int(kind)) for kind in rng.integers(4, size=steps)]
    rewards: List[float] = [float(reward) for reward in rng.choice([-1.0, 1.0], size=steps)]
    boundary: Boundary = Boundary(1, 4)

    def loss() -> Tensor:
        trajectory: Trajectory = Trajectory(
            initial_boundary=boundary, initial_score=0.0, global_score=0.0
        )
        for step, (hidden, kind, reward) in enumerate(zip(hiddens, kinds, rewards), start=1):
            output: PolicyOutput = planner.policy_value(
                PlannerState(activation=hidden, hidden=hidden, step=step)
            )
            trajectory.transitions.append(
                Transition(
                    step=step,
                    boundary_before=boundary,
                    action=Action(kind=kind, amplitude_clips=1),
                    amplitude=10,
                    boundary_after=boundary,
                    score_before=0.0,
                    score_after=0.0,
                    reward=reward,
                    log_prob=output.log_prob(int(kind)),
                    entropy=output.entropy(),
                    value=output.value,
                )
            )

        return a2c_loss(trajectory, entropy_weight=0.1, discount=0.4)

    return loss, planner.actor.parameters()


def _build_inter_loss(rng: np.random.Generator) -> Built:
    scores: Tensor = Tensor(rng.uniform(-1.0, 1.0, size=(4, 4)))
    return lambda: inter_loss(scores, margin=0.2), [scores]


def _build_intra_loss(rng: np.random.Generator) -> Built:
    # current and left exceed the global score, right does not
    global_score: Tensor = Tensor(0.1)
    current: Tensor = Tensor(0.45 + 0.05 * rng.uniform())
    left: Tensor = Tensor(0.3 + 0.05 * rng.uniform())
    right: Tensor = Tensor(-0.2)

    def loss() -> Tensor:
        return intra_loss(
            AlignmentScores(global_score=global_score, current=current, left=left, right=right),
            margin=0.2,
        )

    return loss, [current, left, right]


_cases: List[GradcheckCase] = [
    # operations
    GradcheckCase("add", _binary(ops.add, (3, 4), (4,)), "broadcast addition"),
    GradcheckCase("sub", _binary(ops.sub, (3, 4), (3, 4))),
    GradcheckCase("mul", _binary(ops.mul, (3, 4), (4,)), "broadcast product"),
    GradcheckCase("scale", _unary(lambda value: ops.scale(value, 2.5), 3, 4)),
    GradcheckCase("matmul", _binary(ops.matmul, (3, 4), (4, 2))),
    GradcheckCase("matmul_vector", _binary(ops.matmul, (4,), (4, 2)), "vector-matrix product"),
    GradcheckCase("dot", _binary(ops.matmul, (4,), (4,)), "vector-vector product"),
    GradcheckCase("sigmoid", _unary(ops.sigmoid, 6)),
    GradcheckCase("tanh", _unary(ops.tanh, 6)),
    GradcheckCase("relu", _build_relu),
    GradcheckCase("exp", _unary(ops.exp, 6)),
    GradcheckCase("sum", _unary(ops.sum_all, 3, 4)),
    GradcheckCase("mean_pool", _unary(ops.mean_pool, 4, 3)),
    GradcheckCase("softmax", _unary(ops.softmax, 6)),
    GradcheckCase("log_softmax", _unary(ops.log_softmax, 6)),
    GradcheckCase("l2_normalize", _unary(ops.l2_normalize, 6)),
    GradcheckCase("concat", _build_concat),
    GradcheckCase("stack", _build_stack),
    GradcheckCase("index", _unary(lambda value: ops.index(value, 1), 4, 3), "row lookup"),
    GradcheckCase("slice_rows", _unary(lambda value: ops.slice_rows(value, 1, 4), 5, 3)),
    GradcheckCase("transpose", _unary(ops.transpose, 3, 4)),
    GradcheckCase("diagonal", _unary(ops.diagonal, 4, 4)),
    GradcheckCase("dropout", _build_dropout, "fixed mask in training mode"),
    # layers and model components
    GradcheckCase("linear", _build_linear),
    GradcheckCase("embedding", _build_embedding),
    GradcheckCase("gru_step", _build_gru_step, "one GRU memory update"),
    GradcheckCase("attention", _build_attention, "attention weights and attended feature"),
    GradcheckCase("alignment_score", _build_score, "cosine of attended segment and query"),
    GradcheckCase("cross_gate", _build_cross_gate, "mutual sigmoid gating"),
    GradcheckCase("phi", _build_phi, "state fusion through phi and the GRU memory"),
    GradcheckCase("actor_critic_heads", _build_actor_critic, "policy log-probabilities and value"),
    # losses
    GradcheckCase("a2c_loss", _build_a2c_loss, "actor-critic loss of one episode"),
    GradcheckCase("inter_loss", _build_inter_loss, "inter-video ranking loss"),
    GradcheckCase("intra_loss", _build_intra_loss, "intra-video ranking loss"),
]

gradcheck_cases_by_name: Dict[str, GradcheckCase] = {case.name: case for case in _cases}
