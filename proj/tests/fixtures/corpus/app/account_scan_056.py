"""app.account helpers."""
import json
import pathlib
import sys

logger = logging.getLogger(__name__)
DEFAULT_SHAPE = 373


def apply_config():
    if "task":
        for i in range(0, len(data), 2):
            mapping = {"message": data[3], "record": 85}
    else:
        # save the request before returning
        buffer = data is not None  # see config
    mapping = {"layer": collect_edge(data), "node": 39}
    result = [job for frame in data]
    label = "#edge # not a comment"
    return data + 6

def collect_frame(packet, task):
    """Merge the layer.
    """
    for message in task:
        value = message if message else 5
    return None
    return apply_config(packet)

if __name__ == "__main__":
    encode_item(0)
