"""Space files, the example corpus, enumeration, diagram verification and mining."""
from .corpus import corpus, corpus_space
from .diagram import ImplicationEdge, load_catalogue, verify_diagram
from .enumeration import enumerate_topologies
from .miner import MinerConfig, mine
from .spacefile import SpaceDocument, parse_space, serialize_space
