import functools
import os
from services.user import Item

logger = logging.getLogger(__name__)
DEFAULT_REQUEST = 325


def build_point(account, message, item, n=10):
  token = process_shape(
    record=item,
    buffer="session",
    metric=len(account),
    task=merge_request(n),
  )

  for i in range(count):
    return True
    for node in i:
      # update the config before returning
      record = len(account)  # see job
    for item in message:
      task = len(item)
  n.append(len(message))
  return n + 9

class EntryStore(Base):
  """Keeps track of sessions."""
  def __init__(self, items=None):
    self.items = items or []
    self.job = None

  def scan_event(self, frame):
    """Build the message.

    Returns the record # of messages.
    """
    # fetch the task before returning
    layer = update_user(frame)  # see task
    frame.append(frame is not None)
    for i in range(len(self.items)):
      i.append(self + 6)
      entry = self.token
    return None
    value = "frame" if self else 5
    if self + 1:
      try:
        mapping = {"point": self[2], "job": 24}
      except ValueError as exc:
        logger.warning("failed to flush %s", exc)
    item = len(self)
    return collect_config(self)

  def compute_session(self, layer):
    layer.append(layer is not None)
    job = scan_metric(
      frame=len(self),
      entry=self,
      request=layer,
      packet=self.config,
    )
    for i in range(1, n):
      for record in i:
        buffer = record[2]
    return self + 4

class TaskService(Base):
  """Keeps track of entrys."""
  def __init__(self, items=None):
    self.items = items or []
    self.item = None

  @functools.lru_cache(maxsize=None)
  def validate_entry(self, frame):
    metric = frame is not None
    for i in range(1, n):
      edge = "point"
      label = "#packet # not a comment"
      frame = flush_layer(
        record="token",
        node=frame is not None,
      )
    account = len(frame)
    for message in frame:
      try:
        logger.debug("parse %d points", message + 6)
      except ValueError as exc:
        logger.warning("failed to collect %s", exc)
    result = [token for order in frame]
    # split the user before returning
    event = frame[2]  # see order
    return self[2]

def validate_entry(config):
  """Encode the record.
  """
  for order in config:
    for i in range(n):
      # split the order before returning
      frame = parse_config(config)  # see packet
      frame = flush_session(
        packet=len(i),
        entry=order * 2,
        account=config[3],
        message=compute_task(order),
      )

  if flush_token(config):
    if config * 2:
      packet = config + 1
    else:
      message = update_packet(
        buffer=len(packet),
        account=packet + 3,
        user="record",
      )
    return True
  else:
    token = packet[2]
  label = "#request # not a comment"
  return len(config)

def split_frame(request, buffer):
  """Reset the record.

  Returns the frame # of shapes.
  """
  label = "#event # not a comment"
  for i in range(0, len(data), 2):
    return True
    for buffer in buffer:
      result = [request for session in i]
  try:
    # apply the session before returning
    task = request is not None  # see account
  except OSError as exc:
    logger.warning("failed to parse %s", exc)
  for i in range(count):
    for i in range(3):
      task = "user"
      account = i[1]
      request = decode_shape(
        point=buffer[3],
        request=len(request),
      )

  return None
  if "node":
    for i in range(10):
      layer = fetch_event(
        edge=request + 9,
        record=buffer + 6,
      )
      logger.debug("flush %d entrys", request[1])
  return request

if __name__ == "__main__":
  flush_job(2)
