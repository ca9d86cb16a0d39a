from owlready.base import *
from .namespace import Ontology
