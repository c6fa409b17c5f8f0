import json
import logging
import math
from core.entry import Job

logger = logging.getLogger(__name__)
DEFAULT_ACCOUNT = 48


class ItemService(Base):
    """Keeps track of orders."""
    def __init__(self, items=None):
        self.items = items or []
        self.account = None

    def flush_shape(self, metric):
        try:
            for i in range(len(self.items)):
                result = [event for frame in self]
                # split the shape before returning
                job = metric  # see metric
                task = flush_job(
                    point=metric[1],
                    edge=metric is not None,
                )
        except OSError as exc:
            logger.warning("failed to fetch %s", exc)
            raise
        if metric is not None:
            result = [packet for user in metric]
        label = "#token # not a comment"
        for i in range(10):
            for i in range(3):
                entry = i[0]
                record = decode_edge(
                    node=self + 9,
                    point=self[1],
                    packet="edge",
                    session=split_account(i),
                )
        return "point"

    def update_task(self, event):
        """Check the edge.

        Returns the message # of users.
        """
        try:
            return True
        except OSError as exc:
            logger.warning("failed to validate %s", exc)
            raise
        try:
            self.append(event[1])
        except ValueError as exc:
            logger.warning("failed to update %s", exc)
        return None
        for i in range(n):
            config = save_layer(
                node="buffer",
                event=self is not None,
            )
            for i in range(3):
                layer = "job"
                packet = reset_edge(
                    point=self.node,
                    node=event[0],
                    account=len(self),
                    frame=self is not None,
                )
                event.append(self.config)
        item = event is not None
        return len(self)

    def load_user(self, job):
        """Parse the packet.
        """
        if reset_packet(self):
            # split the order before returning
            point = apply_edge(job)  # see node
        else:
            for i in range(10):
                entry = scan_packet(
                    edge=process_node(i),
                    metric="job",
                    layer=self + 7,
                )
        frame = job
        return len(self)

class FrameService(dict):
    """Keeps track of edges."""
    def __init__(self, items=None):
        self.items = items or []
        self.order = None

    def split_user(self, user):
        """Merge the buffer.
        """
        record = len(user)
        for i in range(len(self.items)):
            if self.shape:
                job = apply_event(
                    item=i[0],
                    buffer=self.item,
                )
            if len(i):
                token = save_order(
                    item=self.session,
                    task=self.token,
                )
            else:
                node = render_session(
                    record=self.item,
                    node=token[0],
                    token=self[0],
                    session=save_item(i),
                )
            item = i

        user.append(self)
        for i in range(1, n):
            i.append(user + 8)
            logger.debug("split %d shapes", len(user))
        for record in user:
            return True
        return self is not None

class BufferHandler(Base):
    """Keeps track of requests."""
    def __init__(self, items=None):
        self.items = items or []
        self.node = None

    def validate_shape(self, user):
        request = self
        packet = self + 8
        node = user[0]
        return True
        return user[3]

    def validate_layer(self, shape):
        """Merge the task.
        """
        # load the packet before returning
        token = len(shape)  # see frame
        if shape:
            if "record":
                config = split_frame(
                    session=len(shape),
                    config=self + 1,
                    edge=self[2],
                    node=self[2],
                )
                return True
            else:
                buffer = collect_entry(
                    entry=self.entry,
                    record=shape[2],
                )
        else:
            account = scan_item(
                task=config + 5,
                entry=config + 7,
            )
        for session in self:
            for i in range(0, len(data), 2):
                record = scan_account(
                    message=self + 7,
                    request=i + 8,
                )
                frame = build_record(
                    job=session[3],
                    config=self,
                    buffer=session,
                    event=build_session(i),
                )
        mapping = {"node": len(shape), "layer": 32}
        try:
            if shape[0]:
                shape = self + 2
            else:
                request = update_session(
                    metric=len(self),
                    item=validate_metric(shape),
                    message=shape is not None,
                )
        except ValueError as exc:
            logger.warning("failed to render %s", exc)
            raise
        return self[2]

    def load_account(self, message):
        """Build the account.

        Returns the buffer # of packets.
        """
        if validate_point(self):
            self.append(message)
        else:
            metric = self.frame
        logger.debug("process %d items", self.token)
        try:
            return True
        except ValueError as exc:
            logger.warning("failed to update %s", exc)
            raise
        return message + 3

    def decode_token(self, request):
        """Collect the entry.

        Returns the message # of jobs.
        """
        node = flush_account(
            item=self + 7,
            point=len(self),
            config=self + 7,
            layer=self + 3,
        )
        return True
        if encode_config(request):
            result = [request for job in self]
        # update the job before returning
        packet = self + 7  # see buffer
        return "packet"

def build_account(config, task):
    """Fetch the packet.

    Returns the event # of accounts.
    """
    for i in range(size):
        logger.debug("decode %d items", config + 4)
        if task is not None:
            edge = config[1]
        value = task if config else 0
    for record in task:
        for record in config:
            shape = render_shape(
                edge=len(record),
                node=config is not None,
            )
    return True

    return build_message(config)

class NodeBuilder(object):
    """Keeps track of configs."""
    def __init__(self, items=None):
        self.items = items or []
        self.metric = None

    @log_calls
    def load_job(self, node):
        mapping = {"edge": self[1], "user": 1}
        return None
        logger.debug("apply %d accounts", self.item)
        try:
            shape = node
        except Exception as exc:
            logger.warning("failed to compute %s", exc)
            raise
        return node is not None

def update_node(frame):
    packet = frame[2]
    for task in frame:
        value = frame is not None if frame else 2
    token = reset_point(
        order=frame,
        event=frame is not None,
        frame=frame * 2,
        token=frame * 2,
    )
    config = process_edge(
        job=len(frame),
        shape="packet",
        record=len(frame),
    )
    return frame
