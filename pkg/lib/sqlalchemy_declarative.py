from sqlalchemy import Column, Integer, String, Boolean, Float, create_engine
from sqlalchemy.orm import declarative_base, sessionmaker, scoped_session

from mckay_app import config, logger

Base = declarative_base()

db = config.get('database', 'url', fallback='sqlite:///mckay.db')


def db_connect(db=db):
    # Tables are created on first use so a fresh sqlite file works
    engine = create_engine(db)
    Base.metadata.create_all(engine)
    session_factory = sessionmaker(bind=engine)
    Session = scoped_session(session_factory)
    session = Session()
    Session.remove()
    return session, engine


def db_insert(df, tableName, db=db):
    session, engine = db_connect(db)
    # Insert into DB
    df.to_sql(tableName, engine, if_exists='append', index=False)
    logger.info('Stored {} rows in {}'.format(len(df), tableName))
    engine.dispose()
    session.close()


##### Lemma Sweep Table #####

class lemmaSweep(Base):
    __tablename__ = 'lemma_sweep'
    id = Column('id', Integer(), index=True, primary_key=True, autoincrement=True)
    group = Column('group', String(255))
    r = Column('r', Integer())
    subgroup = Column('subgroup', String(255))
    subgroup_order = Column('subgroup_order', Integer())
    epsilon = Column('epsilon', String(255))  # exact rational as text
    negatives = Column('negatives', Integer())
    lemma_holds = Column('lemma_holds', Boolean())


##### Conjecture Report Table #####

class conjectureReport(Base):
    __tablename__ = 'conjecture_report'
    id = Column('id', Integer(), index=True, primary_key=True, autoincrement=True)
    group = Column('group', String(255))
    subgroup = Column('subgroup', String(255))
    subgroup_order = Column('subgroup_order', Integer())
    method = Column('method', String(255))
    verified = Column('verified', Boolean())
    lifted = Column('lifted', String(255))
    chi_gamma = Column('chi_gamma', String(255))
    path_length = Column('path_length', Float())
