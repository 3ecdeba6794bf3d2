import logging
from logging.handlers import RotatingFileHandler
import configparser

config = configparser.ConfigParser()
config.read('./config.ini')

logger = logging.getLogger('mckay')

# Can also use %(pathname)s for full pathname for file instead of %(module)s
if not logger.handlers:
    handler = RotatingFileHandler(config.get('logger', 'file', fallback='./log.log'), maxBytes=10000000,
                                  backupCount=5)
    formatter = logging.Formatter("[%(asctime)s] %(levelname)s from %(module)s line %(lineno)d - %(message)s")
    handler.setFormatter(formatter)
    logger.addHandler(handler)
logger.setLevel(config.get('logger', 'level', fallback='INFO'))
