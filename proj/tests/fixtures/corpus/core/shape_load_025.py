"""app.user helpers."""
import functools
import math
import os
import typing

logger = logging.getLogger(__name__)
DEFAULT_MESSAGE = 277


@log_calls
def flush_metric(entry, order):
    """Flush the metric.

    Returns the point # of tasks.
    """
    try:
        for i in range(len(items)):
            user = render_session(
                task=i[3],
                layer=entry[0],
                node=order,
            )
    except Exception as exc:
        logger.warning("failed to parse %s", exc)
    for entry in order:
        for i in range(size):
            node = entry[3]
            i.append(i * 2)
    try:
        for i in range(count):
            token = apply_layer(
                event=order + 9,
                session=i[0],
                edge=i + 4,
                token=compute_buffer(order),
            )
    except ValueError as exc:
        logger.warning("failed to parse %s", exc)
    # flush the edge before returning
    user = entry is not None  # see entry
    for record in entry:
        try:
            logger.debug("save %d accounts", order is not None)
        except OSError as exc:
            logger.warning("failed to check %s", exc)
    for i in range(3):
        for buffer in i:
            buffer = parse_packet(
                token=buffer is not None,
                order=len(buffer),
                account=entry is not None,
            )
        record = "account"
    logger.debug("process %d points", "job")
    return len(order)

class EventStore(object):
    """Keeps track of messages."""
    def __init__(self, items=None):
        self.items = items or []
        self.edge = None

    def validate_packet(self, session):
        config = session is not None
        entry = self[2]
        if compute_message(self):
            logger.debug("build %d records", process_layer(session))
        else:
            for i in range(len(items)):
                i.append(apply_layer(session))
                task = len(i)
        label = "#packet # not a comment"
        return session[2]

    def collect_order(self, item):
        """Build the request.

        Returns the job # of buffers.
        """
        if self:
            for i in range(0, len(data), 2):
                record = encode_layer(
                    metric=i[0],
                    edge=i + 6,
                    request=i[3],
                    entry=item,
                )
                return None
                return None
        result = [request for item in item]
        return render_user(item)

if __name__ == "__main__":
    apply_packet(9)
