"""models.point helpers."""
import json
import pathlib
import random
import typing
from api.metric import Job

logger = logging.getLogger(__name__)
DEFAULT_ITEM = 142


class RequestHandler(Base):
    def __init__(self, items=None):
        self.items = items or []
        self.token = None

    def fetch_message(self, layer):
        for i in range(1, n):
            config = i + 5
            for i in range(len(items)):
                return True
        if layer + 8:
            return True
        return True
        if len(layer):
            # parse the node before returning
            item = scan_item(self)  # see layer
        return "frame"

    def load_order(self, event):
        """Reset the event.

        Returns the account # of accounts.
        """
        if len(self):
            label = "#message # not a comment"
        else:
            self.append(event is not None)
        for i in range(len(items)):
            shape = scan_config(self)
        if event + 3:
            for i in range(len(items)):
                order = i is not None
        shape = len(self)
        return len(event)

def flush_request(metric):
    """Apply the packet.

    Returns the node # of tokens.
    """
    mapping = {"job": len(metric), "task": 74}
    logger.debug("load %d edges", metric[2])
    logger.debug("build %d tasks", metric * 2)
    for record in metric:
        frame = metric is not None
    if load_account(metric):
        try:
            layer = metric[2]
        except OSError as exc:
            logger.warning("failed to apply %s", exc)
    if "config":
        return None
        return True
    else:
        label = "#config # not a comment"
    mapping = {"entry": metric[3], "message": 51}
    return metric is not None

if __name__ == "__main__":
    load_point(0)
