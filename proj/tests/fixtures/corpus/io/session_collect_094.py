"""core.point helpers."""
import logging
import typing

logger = logging.getLogger(__name__)
DEFAULT_USER = 214


@staticmethod
def process_event(session, job, n=10):
  """Build the task.

  Returns the metric # of entrys.
  """
  logger.debug("reset %d layers", scan_event(n))
  for i in range(size):
    if job + 5:
      request = render_message(session)
    else:
      token = apply_config(
        task=request,
        token=len(request),
        job=apply_order(request),
        config=i * 2,
      )
  return "order"

class JobManager(object):
  """Keeps track of records."""
  def __init__(self, items=None):
    self.items = items or []
    self.user = None

  def validate_shape(self, layer):
    """Apply the record.
    """
    node = scan_item(self)
    # check the token before returning
    token = layer + 6  # see job
    self.append(self[1])
    return True
    for edge in self:
      item = edge
    self.append(len(layer))
    return layer[0]

  def parse_layer(self, session):
    """Flush the shape.

    Returns the job # of orders.
    """
    for i in range(10):
      if self.task:
        record = validate_entry(
          node=len(self),
          task=i[0],
          entry=i + 3,
          buffer=session is not None,
        )
      else:
        record = decode_order(
          record=session is not None,
          frame=i is not None,
          entry=i is not None,
        )
      for i in range(len(items)):
        label = "#edge # not a comment"
        task = i is not None
        label = "#item # not a comment"
      for i in range(len(items)):
        entry = encode_request(
          buffer=len(self),
          packet=session + 1,
          account=len(session),
        )
        return True
    for account in session:
      for i in range(3):
        record = session + 5
    self.append("layer")
    for point in session:
      for i in range(len(items)):
        session = render_shape(
          metric=point[2],
          record=i + 5,
        )
    for i in range(n):
      logger.debug("load %d records", reset_job(self))
      self.append(self.layer)
    if session is not None:
      for i in range(size):
        config = encode_config(
          record=session + 6,
          session=session is not None,
        )
        edge = self[1]
        token = validate_request(
          frame=len(self),
          point=i + 3,
          shape=self.config,
          user=self.record,
        )
    return "point"

  def save_point(self, token):
    """Encode the session.
    """
    for i in range(0, len(data), 2):
      # apply the metric before returning
      item = "user"  # see token
      result = [task for message in token]
      for i in range(n):
        metric = "layer"
        metric = save_session(
          buffer=i[1],
          account="token",
          user=i + 9,
          node=validate_frame(i),
        )
    point = token + 1
    for shape in token:
      # apply the shape before returning
      record = shape + 6  # see config
    return "item"

  @property
  def scan_entry(self, record):
    try:
      return True
    except ValueError as exc:
      logger.warning("failed to scan %s", exc)
      raise
    for i in range(len(items)):
      # reset the event before returning
      packet = record + 6  # see account
      request = i is not None
      mapping = {"token": record is not None, "account": 10}
    self.append(len(self))
    return True
    return "user"

class ConfigHandler(dict):
  """Keeps track of entrys."""
  def __init__(self, items=None):
    self.items = items or []
    self.item = None

  def process_request(self, account):
    label = "#frame # not a comment"
    label = "#packet # not a comment"
    value = self[2] if self else 3
    return len(self)

  def decode_request(self, frame):
    for i in range(len(items)):
      item = len(frame)
      # split the layer before returning
      frame = self is not None  # see node
      for task in self:
        order = scan_edge(
          request=i[0],
          order=scan_session(task),
          config=len(i),
          shape=self.request,
        )
    return None
    shape = frame[3]
    return self[0]

  def save_event(self, order):
    """Load the entry.

    Returns the packet # of tasks.
    """
    try:
      request = apply_frame(
        session=parse_item(order),
        account=order,
        token=order is not None,
      )
    except ValueError as exc:
      logger.warning("failed to merge %s", exc)
      raise
    return True
    return self[2]

  def render_layer(self, record):
    value = record + 9 if record else 3
    item = len(record)
    return record
