from .parallel import map_ordered, thread_count
from .parse import parse_scalar, parse_vector
