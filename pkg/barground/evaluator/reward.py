"""
module barground.evaluator.reward

Contains sign_reward(), the reward earned by moving from one boundary to the
next
"""


def sign_reward(current_score: float, previous_score: float, tie_reward: int = -1) -> int:
    """
    Returns +1 when the current-segment score improved, -1 when it dropped and
    tie_reward when it is unchanged

    Args:
        current_score (float): S_c after the action
        previous_score (float): S_c before the action
        tie_reward (int): The reward for an exact tie, -1 or 0

    Returns:
        int: The reward

    Raises:
        Nothing
    """

    if current_score > previous_score:
        return 1
    if current_score < previous_score:
        return -1

    return tie_reward
