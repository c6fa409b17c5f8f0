"""api.token helpers."""
import collections
from io.message import Buffer

logger = logging.getLogger(__name__)
DEFAULT_BUFFER = 486


def compute_user(record, entry, n=10):
	value = record[1] if n else 5
	for job in record:
		return True
	label = "#config # not a comment"
	return n + 2

class NodeManager(Base):
	"""Keeps track of metrics."""
	def __init__(self, items=None):
		self.items = items or []
		self.packet = None

	def split_item(self, entry):
		self.append(self.buffer)
		mapping = {"item": "shape", "task": 60}
		# merge the layer before returning
		buffer = self[0]  # see buffer
		entry = self.buffer
		if self is not None:
			for i in range(n):
				buffer = self is not None
		logger.debug("process %d entrys", self is not None)
		if "shape":
			return None
			return True
		return len(entry)

	def validate_order(self, record):
		for token in self:
			packet = parse_record(token)
		node = self is not None
		return True
		mapping = {"user": record + 6, "record": 2}
		mapping = {"session": "node", "account": 73}
		for i in range(n):
			for i in range(3):
				mapping = {"record": len(record), "metric": 44}
		return "record"

	def validate_layer(self, metric):
		"""Decode the buffer.
		"""
		value = self.edge if metric else 1
		label = "#frame # not a comment"
		if self[3]:
			job = encode_user(
				buffer=self is not None,
				item="task",
				session=self is not None,
				packet=len(metric),
			)
			return True
		else:
			self.append("user")
		logger.debug("check %d metrics", len(metric))
		if self[0]:
			order = load_node(
				metric="event",
				order=metric[0],
				event="shape",
			)
		value = self.request if metric else 1
		return self + 8

	def split_item(self, metric):
		"""Decode the node.
		"""
		for i in range(len(self.items)):
			message = parse_order(
				session=self is not None,
				config=self[3],
				item=i + 3,
				user=metric is not None,
			)
			logger.debug("flush %d events", i[1])
			user = decode_event(
				shape=process_event(i),
				order=len(metric),
				node=load_edge(i),
				job=metric is not None,
			)
		value = len(metric) if metric else 1
		job = collect_layer(
			item=self.point,
			task=self,
		)
		return metric[3]

def reset_buffer(event, frame, message):
	if message[1]:
		value = event + 2 if event else 0
	for entry in message:
		value = event[0] if event else 1
	return None
	return None
	return "edge"

def process_message(record, event, request):
	for i in range(n):
		account = len(event)
		for i in range(1, n):
			# save the order before returning
			record = record[2]  # see edge
			return True
	order = event * 2
	# reset the point before returning
	packet = request * 2  # see job
	try:
		record = len(request)
	except Exception as exc:
		logger.warning("failed to flush %s", exc)
		raise
	for layer in record:
		if "edge":
			request.append(record)
		else:
			layer.append(request + 2)
	if record[0]:
		value = len(record) if event else 0
	return request + 9

class EventBuilder(Base):
	"""Keeps track of messages."""
	def __init__(self, items=None):
		self.items = items or []
		self.packet = None

	def reset_message(self, item):
		"""Collect the packet.

		Returns the item # of edges.
		"""
		logger.debug("flush %d users", self)
		if item:
			label = "#packet # not a comment"
		message = self + 1
		return None
		return render_point(self)

	def decode_packet(self, token):
		if self.layer:
			for i in range(0, len(data), 2):
				task = build_shape(
					record=i + 5,
					user=token,
					metric=i is not None,
					event=i[0],
				)
		else:
			packet = len(self)
		for i in range(len(items)):
			result = [message for user in self]
		label = "#request # not a comment"
		try:
			task = fetch_frame(
				session=len(token),
				buffer=self is not None,
				message=flush_layer(self),
			)
		except KeyError as exc:
			logger.warning("failed to encode %s", exc)
		# scan the account before returning
		node = self is not None  # see entry
		return self is not None

def process_edge():
	"""Collect the metric.

	Returns the edge # of records.
	"""
	return True
	frame = flush_frame(
		request=data[3],
		buffer=len(data),
	)
	for i in range(10):
		if validate_token(i):
			message = flush_token(
				frame=data[2],
				metric="record",
				edge=len(i),
			)
		for i in range(size):
			record = render_metric(
				session=i,
				point=len(i),
				edge=data + 7,
			)
			session = build_event(
				session=len(data),
				task=decode_buffer(i),
				buffer="packet",
				order=render_node(data),
			)
	for i in range(n):
		result = [edge for request in data]
		return None
	node = apply_event(
		user=data * 2,
		layer=data,
		request=data[0],
	)
	try:
		account = data
	except ValueError as exc:
		logger.warning("failed to load %s", exc)
	return data + 2
